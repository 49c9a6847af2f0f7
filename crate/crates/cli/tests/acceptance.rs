//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use odlab_core::chromatic::{
    b, chromatic_number, line_chromatic_target, verify_coloring, ChromaticOptions,
};
use odlab_core::clique::clique_number;
use odlab_core::gf::{has_nonzero_isotropic, Field, Subspace, SubspaceGuard};
use odlab_core::graph::generators::{complete, cycle, petersen, random};
use odlab_core::graph::{line_digraph, serialize_graph, Graph};
use odlab_core::hom::find_homomorphism;
use odlab_core::index_code::{
    coloring_from_index_code, line_coloring_from_index_code, linear_code_from_matrix,
    optimal_index_code_bruteforce, verify_index_code, verify_index_code_exhaustive,
};
use odlab_core::params::{
    build_o, build_oprime, find_orth_rep, find_pair_rep, minrank, orthogonality_dimension,
    verify_orth_rep, verify_pair_rep, verify_repr_matrix, OrthRep, PairRep, ParamOptions, TargetGuard,
};
use odlab_core::real::{random_adjacent_s_pair, rounding_error, subspace_color, TOL};
use odlab_core::subspace_graphs::{
    build_s, build_sprime, canonical_clique_s, hom_line_to_subspace_pairs, hom_line_to_subspaces,
    hom_subspace_pairs_to_line, hom_subspaces_to_line, is_s_clique, verify_subspace_hom,
    verify_subspace_pair_hom,
};
use odlab_core::SearchLimits;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn gf(q: u32) -> Field {
    Field::new(q).unwrap()
}

/// 100 seeded G(n, 1/2) graphs with 3 to 8 vertices.
fn random_corpus() -> Vec<Graph> {
    (0..100u64).map(|seed| random(3 + (seed % 6) as usize, 0.5, seed)).collect()
}

fn named() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("C5".to_string(), cycle(5)),
        ("C7".to_string(), cycle(7)),
    ];
    for k in 3..=5 {
        out.push((format!("K{k}"), complete(k)));
    }
    out.push(("petersen".to_string(), petersen()));
    out
}

fn full_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = random_corpus()
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("random#{i}"), g))
        .collect();
    out.extend(named());
    out
}

fn chi(g: &Graph) -> usize {
    chromatic_number(g, &ChromaticOptions { max_vertices: 200, ..Default::default() })
        .unwrap()
        .chi
}

fn qpow(q: u32, e: usize) -> u128 {
    (q as u128).saturating_pow(e as u32)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut graphs: Vec<(String, Graph)> = random_corpus()
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("random#{i}"), g))
        .collect();
    graphs.extend(named());
    for (name, g) in &graphs {
        let c = chi(g);
        let h = line_digraph(g).underlying();
        let ch = chi(&h);
        let target = line_chromatic_target(c);
        if ch != target {
            return Err(format!("{name}: chi(G)={c}, chi(H)={ch}, expected {target}"));
        }
    }
    let t = start.elapsed();
    if t > Duration::from_secs(600) {
        return Err(format!("took {t:?}"));
    }
    Ok(format!("{} graphs in {:.2}s", graphs.len(), t.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let opts = ParamOptions::default();
    let graphs = random_corpus();
    for (i, g) in graphs.iter().take(50).enumerate() {
        let c = chi(g);
        for q in [2, 3] {
            let od = orthogonality_dimension(g, gf(q), 8, &opts).unwrap().ok_or("od above 8")?;
            let mr = minrank(&g.complement(), gf(q), 8, &opts).unwrap().ok_or("minrank above 8")?;
            if !verify_orth_rep(g, &od.witness) || !verify_repr_matrix(&g.complement(), &mr.witness.matrix) {
                return Err(format!("random#{i} q={q}: witness rejected"));
            }
            let (m, o) = (mr.value, od.value);
            if !(m <= o && o <= c) {
                return Err(format!("random#{i} q={q}: minrank={m} od={o} chi={c}"));
            }
            if qpow(q, m) < c as u128 {
                return Err(format!("random#{i} q={q}: {q}^{m} < chi={c}"));
            }
        }
    }
    Ok("50 graphs, q in {2,3}".into())
}

fn exact_od(g: &Graph, q: u32) -> Result<usize, String> {
    let r = orthogonality_dimension(g, gf(q), 8, &ParamOptions::default()).unwrap().ok_or("od above 8")?;
    if !verify_orth_rep(g, &r.witness) || r.witness.k != r.value {
        return Err("od witness rejected".into());
    }
    if r.value > 0 {
        let plain = ParamOptions { symmetry: false, ..Default::default() };
        if find_orth_rep(g, gf(q), r.value - 1, &plain).unwrap().is_some() {
            return Err("od not minimal".into());
        }
    }
    Ok(r.value)
}

fn exact_minrank(g: &Graph, q: u32) -> Result<usize, String> {
    let r = minrank(g, gf(q), 8, &ParamOptions::default()).unwrap().ok_or("minrank above 8")?;
    if !verify_repr_matrix(g, &r.witness.matrix) || r.witness.matrix.rank != r.value {
        return Err("minrank witness rejected".into());
    }
    if r.value > 0 {
        let plain = ParamOptions { symmetry: false, ..Default::default() };
        if find_pair_rep(&g.complement(), gf(q), r.value - 1, &plain).unwrap().is_some() {
            return Err("minrank not minimal".into());
        }
    }
    Ok(r.value)
}

fn criterion_3() -> Outcome {
    let mut checks: Vec<(String, usize, usize)> = vec![
        ("od_2(K3)".into(), exact_od(&complete(3), 2)?, 3),
        ("od_2(C5)".into(), exact_od(&cycle(5), 2)?, 3),
        ("minrank_2(C5)".into(), exact_minrank(&cycle(5), 2)?, 3),
    ];
    for n in 1..=6 {
        checks.push((format!("minrank_2(K{n})"), exact_minrank(&complete(n), 2)?, 1));
        checks.push((format!("minrank_2(E{n})"), exact_minrank(&Graph::empty(n), 2)?, n));
    }
    for (what, got, want) in &checks {
        if got != want {
            return Err(format!("{what} = {got}, expected {want}"));
        }
    }
    Ok(format!("{} values", checks.len()))
}

fn criterion_4() -> Outcome {
    let f = gf(2);
    let guard = SubspaceGuard::default();
    let graphs: Vec<Graph> = random_corpus().into_iter().take(20).collect();
    let mut agreements = 0;
    for n in 1..=3 {
        let o = build_o(f, n, &TargetGuard::default()).unwrap();
        let s = build_s(f, n, &guard).unwrap();
        let op = build_oprime(f, n, &TargetGuard::default()).unwrap();
        let sp = build_sprime(f, n, &guard).unwrap();
        for (i, g) in graphs.iter().enumerate() {
            let h = line_digraph(g).underlying();
            let to_o = find_homomorphism(&h, &o.graph, &Default::default()).unwrap();
            let to_s = find_homomorphism(g, &s.graph, &Default::default()).unwrap();
            if to_o.is_some() != to_s.is_some() {
                return Err(format!("random#{i} n={n}: H->O {} but G->S {}", to_o.is_some(), to_s.is_some()));
            }
            if let Some(m) = to_s {
                let subs: Vec<Subspace> = m.map.iter().map(|&x| s.subspaces[x].clone()).collect();
                let rep = hom_subspaces_to_line(g, f, n, &subs, &guard).map_err(|e| e.to_string())?;
                if !verify_orth_rep(&h, &rep) {
                    return Err(format!("random#{i} n={n}: translated representation rejected"));
                }
            }
            if let Some(m) = to_o {
                let rep = OrthRep { field: f, k: n, vectors: m.map.iter().map(|&x| o.vectors[x].clone()).collect() };
                let subs = hom_line_to_subspaces(g, &rep, &guard).map_err(|e| e.to_string())?;
                if !verify_subspace_hom(g, f, n, &subs, &guard).unwrap() {
                    return Err(format!("random#{i} n={n}: translated subspaces rejected"));
                }
            }

            let to_op = find_homomorphism(&h, &op.graph, &Default::default()).unwrap();
            let to_sp = find_homomorphism(g, &sp.graph, &Default::default()).unwrap();
            if to_op.is_some() != to_sp.is_some() {
                return Err(format!("random#{i} n={n}: H->O' {} but G->S' {}", to_op.is_some(), to_sp.is_some()));
            }
            if let Some(m) = to_sp {
                let pairs: Vec<_> = m.map.iter().map(|&x| sp.pairs[x].clone()).collect();
                let rep = hom_subspace_pairs_to_line(g, f, n, &pairs, &guard).map_err(|e| e.to_string())?;
                if !verify_pair_rep(&h, &rep) {
                    return Err(format!("random#{i} n={n}: translated pairs rejected"));
                }
            }
            if let Some(m) = to_op {
                let rep = PairRep { field: f, k: n, pairs: m.map.iter().map(|&x| op.pairs[x].clone()).collect() };
                let pairs = hom_line_to_subspace_pairs(g, &rep, &guard).map_err(|e| e.to_string())?;
                if !verify_subspace_pair_hom(g, f, n, &pairs, &guard).unwrap() {
                    return Err(format!("random#{i} n={n}: translated subspace pairs rejected"));
                }
            }
            agreements += 2;
        }
    }
    Ok(format!("{agreements} agreeing pairs of searches"))
}

fn criterion_5() -> Outcome {
    let opts = ParamOptions::default();
    let corpus = full_corpus();
    for (name, g) in &corpus {
        let c = chi(g);
        let h = line_digraph(g).underlying();
        let hc = h.complement();
        for q in [2, 3] {
            let od = orthogonality_dimension(&h, gf(q), 8, &opts).unwrap().ok_or("od above 8")?;
            let mr = minrank(&hc, gf(q), 8, &opts).unwrap().ok_or("minrank above 8")?;
            if !verify_orth_rep(&h, &od.witness) || !verify_repr_matrix(&hc, &mr.witness.matrix) {
                return Err(format!("{name} q={q}: witness rejected"));
            }
            // od >= sqrt(log_q chi)  <=>  q^(od^2) >= chi
            if qpow(q, od.value * od.value) < c as u128 {
                return Err(format!("{name} q={q}: od(H)={} chi(G)={c}", od.value));
            }
            // minrank >= sqrt(log_q(chi) / 2)  <=>  q^(2 minrank^2) >= chi
            if qpow(q, 2 * mr.value * mr.value) < c as u128 {
                return Err(format!("{name} q={q}: minrank(complement H)={} chi(G)={c}", mr.value));
            }
        }
    }
    Ok(format!("{} graphs, q in {{2,3}}", corpus.len()))
}

fn criterion_6() -> Outcome {
    let guard = SubspaceGuard::default();
    let limits = SearchLimits::unlimited();
    let s32 = build_s(gf(3), 2, &guard).unwrap();
    let (omega, _) = clique_number(&s32.graph, &limits).unwrap();
    if has_nonzero_isotropic(gf(3), 2, &guard).unwrap() {
        return Err("GF(3)^2 has a nonzero isotropic vector".into());
    }
    if omega != 2 || b(2) != 2u32.into() {
        return Err(format!("omega(S(GF(3),2)) = {omega}"));
    }
    let mut notes = Vec::new();
    for (q, n) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
        let f = gf(q);
        let bn: usize = b(n as u64).try_into().unwrap();
        let clique = canonical_clique_s(f, n);
        if clique.len() != bn || !is_s_clique(&clique, &guard).unwrap() {
            return Err(format!("canonical clique of S(GF({q}),{n}) has size {} or is not a clique", clique.len()));
        }
        let s = build_s(f, n, &guard).unwrap();
        let (omega, best) = clique_number(&s.graph, &limits).unwrap();
        let members: Vec<Subspace> = best.iter().map(|&i| s.subspaces[i].clone()).collect();
        if !is_s_clique(&members, &guard).unwrap() || omega < bn {
            return Err(format!("S(GF({q}),{n}): clique of size {omega} invalid"));
        }
        let free = !has_nonzero_isotropic(f, n, &guard).unwrap();
        if free && omega > bn {
            return Err(format!("S(GF({q}),{n}): omega {omega} exceeds b({n}) = {bn}"));
        }
        notes.push(format!("omega(S({q},{n}))={omega}{}", if free { "" } else { "*" }));
    }
    Ok(notes.join(" "))
}

fn criterion_7() -> Outcome {
    let guard = SubspaceGuard::default();
    let mut notes = Vec::new();
    for (q, n) in [(2, 2), (2, 3), (3, 2)] {
        let s = build_s(gf(q), n, &guard).unwrap();
        let r = chromatic_number(&s.graph, &ChromaticOptions { max_vertices: 200, ..Default::default() }).unwrap();
        if !verify_coloring(&s.graph, &r.coloring) || r.coloring.used() != r.chi {
            return Err(format!("S(GF({q}),{n}): colouring rejected"));
        }
        if r.chi as u128 > qpow(q, n * n) {
            return Err(format!("chi(S(GF({q}),{n})) = {} > {q}^{}", r.chi, n * n));
        }
        notes.push(format!("chi(S({q},{n}))={}", r.chi));
    }
    Ok(notes.join(" "))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for n in 2..=6 {
        let bound = 1.0 / (2.0 * n as f64) + TOL;
        for seed in 0..10_000u64 {
            let (u, v) = random_adjacent_s_pair(n, seed).map_err(|e| e.to_string())?;
            let (cu, cv) = (subspace_color(&u), subspace_color(&v));
            if cu == cv {
                return Err(format!("n={n} seed={seed}: equal colours"));
            }
            for (s, c) in [(&u, &cu), (&v, &cv)] {
                let e = rounding_error(s, c);
                worst = worst.max(e * 2.0 * n as f64);
                if e > bound {
                    return Err(format!("n={n} seed={seed}: rounding error {e}"));
                }
            }
        }
    }
    let t = start.elapsed();
    if t > Duration::from_secs(120) {
        return Err(format!("took {t:?}"));
    }
    Ok(format!("50000 pairs in {:.2}s, worst error {worst:.4} of the bound", t.as_secs_f64()))
}

fn criterion_9() -> Outcome {
    let opts = ParamOptions::default();
    let f2 = gf(2);
    let corpus = full_corpus();
    for (name, g) in corpus.iter().filter(|(_, g)| g.n() <= 10) {
        let r = minrank(g, f2, 10, &opts).unwrap().ok_or("minrank above 10")?;
        let code = linear_code_from_matrix(g, &r.witness.matrix).map_err(|e| e.to_string())?;
        if code.length() != r.value || !verify_index_code_exhaustive(g, &code).unwrap() {
            return Err(format!("{name}: linear code of length {} rejected", code.length()));
        }
    }
    let limits = SearchLimits::unlimited();
    for (name, g, want) in [("K2", complete(2), 1), ("K3", complete(3), 1), ("E2", Graph::empty(2), 2)] {
        let (k, code) = optimal_index_code_bruteforce(&g, 2, 4, &limits).unwrap().ok_or("no code")?;
        if k != want || !verify_index_code_exhaustive(&g, &code).unwrap() {
            return Err(format!("optimal length for {name} is {k}, expected {want}"));
        }
    }
    for (name, g) in [("C5", cycle(5)), ("K4", complete(4))] {
        let c = chi(&g);
        // Code for the complement of G, then a colouring of G.
        let gc = g.complement();
        let r = minrank(&gc, f2, 8, &opts).unwrap().ok_or("minrank above 8")?;
        let code = linear_code_from_matrix(&gc, &r.witness.matrix).unwrap();
        if !verify_index_code(&gc, &code).unwrap() {
            return Err(format!("{name}: code for the complement rejected"));
        }
        let col = coloring_from_index_code(&g, &code).map_err(|e| e.to_string())?;
        if !verify_coloring(&g, &col) || col.palette() as u128 > 1u128 << qpow(2, code.length()) || col.used() < c {
            return Err(format!("{name}: extracted colouring rejected"));
        }
        // Code for the complement of H, then a colouring of G.
        let hc = line_digraph(&g).underlying().complement();
        let r = minrank(&hc, f2, 8, &opts).unwrap().ok_or("minrank above 8")?;
        let code = linear_code_from_matrix(&hc, &r.witness.matrix).unwrap();
        if !verify_index_code(&hc, &code).unwrap() {
            return Err(format!("{name}: code for the complement of H rejected"));
        }
        let col = line_coloring_from_index_code(&g, &code).map_err(|e| e.to_string())?;
        if !verify_coloring(&g, &col) || col.palette() as u128 > 1u128 << qpow(2, code.length()) || col.used() < c {
            return Err(format!("{name}: colouring from the line code rejected"));
        }
    }
    Ok(format!("{} linear codes verified exhaustively", corpus.len()))
}

struct Run {
    status: Option<i32>,
    stdout: Vec<u8>,
    files: Vec<Vec<u8>>,
}

fn odlab(args: &[&str], outputs: &[&Path]) -> Run {
    for p in outputs {
        let _ = std::fs::remove_file(p);
    }
    let o = Command::new(env!("CARGO_BIN_EXE_odlab")).args(args).output().expect("run odlab");
    Run {
        status: o.status.code(),
        stdout: o.stdout,
        files: outputs.iter().map(|p| std::fs::read(p).unwrap_or_default()).collect(),
    }
}

fn criterion_10() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = |name: &str| -> PathBuf { dir.path().join(name) };
    let s = |p: &PathBuf| p.to_str().unwrap().to_string();

    let c5 = path("c5.dimacs");
    std::fs::write(&c5, serialize_graph(&cycle(5))).unwrap();
    let c5c = path("c5c.dimacs");
    std::fs::write(&c5c, serialize_graph(&cycle(5).complement())).unwrap();
    let code = path("code.json");
    let code_args = ["index-code", "from-minrank", &s(&c5c), "--json", &s(&code)];
    let first = odlab(&code_args, &[&code]);
    if first.status != Some(0) {
        return Err("index-code from-minrank failed".into());
    }

    let mut commands: Vec<(Vec<String>, Vec<PathBuf>)> = Vec::new();
    let mut cmd = |args: &[&str], outs: &[&PathBuf]| {
        commands.push((args.iter().map(|a| a.to_string()).collect(), outs.iter().map(|p| p.to_path_buf()).collect()));
    };
    cmd(&["chi", &s(&c5), "--json", &s(&path("chi.json"))], &[&path("chi.json")]);
    cmd(&["od", "@petersen", "--field", "3", "--json", &s(&path("od.json"))], &[&path("od.json")]);
    cmd(&["minrank", "@C5", "--json", &s(&path("mr.json"))], &[&path("mr.json")]);
    for t in ["od", "minrank", "ic"] {
        cmd(&["reduce", "@petersen", "--target", t], &[]);
    }
    for k in ["S", "Sprime", "O", "Oprime"] {
        cmd(&["subspace-graph", "--field", "2", "--n", "2", "--kind", k], &[]);
    }
    for name in ["C5", "K4", "E3", "P4", "petersen", "kneser:5:2", "double-shift:7", "random:8:0.5:42"] {
        cmd(&["gen", name], &[]);
    }
    cmd(&code_args, &[&code]);
    cmd(&["index-code", "verify", &s(&c5c), "--code", &s(&code)], &[]);
    cmd(&["index-code", "brute", "@C4"], &[]);
    cmd(&["index-code", "extract-coloring", &s(&c5), "--code", &s(&code), "--json", &s(&path("col.json"))], &[&path("col.json")]);

    let report_graphs = ["@C5", "@C7", "@K3", "@K4", "@E3", "@petersen", "@random:6:0.5:1", "@random:7:0.5:2", "@random:8:0.5:3"];
    let mut reports = Vec::new();
    for (i, g) in report_graphs.iter().enumerate() {
        let out = path(&format!("report{i}.json"));
        cmd(&["verify", "all", g, "--field", "2", "--field", "3", "--json", &s(&out)], &[&out]);
        reports.push(out);
    }
    let mut certs = vec![path("chi.json"), path("od.json"), path("mr.json"), path("col.json"), code.clone()];
    certs.extend(reports.iter().cloned());

    for (args, outs) in &commands {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let outs: Vec<&Path> = outs.iter().map(PathBuf::as_path).collect();
        let a = odlab(&refs, &outs);
        let b = odlab(&refs, &outs);
        if a.status != Some(0) {
            return Err(format!("`odlab {}` exited with {:?}", args.join(" "), a.status));
        }
        if a.status != b.status || a.stdout != b.stdout || a.files != b.files {
            return Err(format!("`odlab {}` differs between runs", args.join(" ")));
        }
    }

    let mut verified = 0;
    for c in &certs {
        let args = ["check-witness", &s(c)];
        let a = odlab(&args, &[]);
        let b = odlab(&args, &[]);
        let text = String::from_utf8_lossy(&a.stdout).to_string();
        if a.status != Some(0) || a.stdout != b.stdout {
            return Err(format!("check-witness {}: {text}", c.display()));
        }
        let last = text.lines().last().unwrap_or_default().to_string();
        let words: Vec<&str> = last.split_whitespace().collect();
        if words.len() < 3 || words[0] != words[2] || words[0] == "0" {
            return Err(format!("check-witness {}: {last}", c.display()));
        }
        verified += words[0].parse::<usize>().unwrap();
    }
    Ok(format!("{} commands stable, {verified} certificates re-verified", commands.len() + certs.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("chromatic number of the line digraph", criterion_1),
        ("minrank <= od <= chi and the log bound", criterion_2),
        ("regression values", criterion_3),
        ("homomorphisms into O and S, O' and S' agree", criterion_4),
        ("od and minrank lower bounds for H", criterion_5),
        ("cliques of S(F,n)", criterion_6),
        ("chi(S(F,n)) <= q^(n^2)", criterion_7),
        ("rounded colours of real subspaces", criterion_8),
        ("index codes", criterion_9),
        ("determinism and witness re-verification", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:2} PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:2} FAIL  {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
