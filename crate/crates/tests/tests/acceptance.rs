//! Acceptance gate: prints one PASS/FAIL line per criterion, with the failing
//! sub-checks listed underneath, and exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::time::Instant;

use nalgebra::DMatrix;
use permsym::entanglement::{
    antisymmetric_pairs, basis_type, ces_intersection_qubit_qudit, ces_orthocomplement_basis,
    ces_qubit_qudit_basis, check_symmetric_product, chi1, cut_entanglement, entanglement_e1,
    entanglement_et, exchange_entanglement_check, gamma_entanglement_closed_form, gamma_state,
    ghz_entanglement_closed_form, ghz_like, haar_random_state_with, min_entanglement_estimate,
    psi_p, reduced_density, sigma_state, symmetric_product_constraints,
    symmetric_product_families, ProductTerm, StateVector,
};
use permsym::linalg::{rank, real_eigenvalues_complex, spectral_radius_real};
use permsym::partitions::{all_partitions, apply_perm, partitions_with_k, primitive_partition};
use permsym::perm_engine::{
    canonicalize, cycle_count, cycle_decomposition, l_star, label_perm, parse_cycle_notation,
};
use permsym::report::Grid;
use permsym::scans::{chi_csv, chi_scan, coarse_table, dims_scan, trace_distance_scan, ChiFamily};
use permsym::spectral::{
    all_eigenspaces, antisymmetric_is_zero, antisymmetric_projector, binomial, build_operator,
    cyclic_shift_dims, cyclic_sym_dim, cyclic_sym_dim_enumerated, eigenspace, rho_family,
    spectrum, symmetric_projector, transformed_basis,
};
use permsym::{Dims, Limits, RootOfUnity, SubsystemPerm, C64};
use permsym_tests::{
    bipartitions, kron_power, multiset_match, random_unitary, real_diag, shapes_up_to,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Default)]
struct Criterion {
    failures: Vec<String>,
    checks: usize,
}

impl Criterion {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn dims(v: &[usize]) -> Dims {
    Dims::new(v.to_vec()).unwrap()
}

fn perm(s: &str) -> SubsystemPerm {
    s.parse().unwrap()
}

fn c1_cycle_tables(c: &mut Criterion) {
    let bipartite = [
        ((2, 3), "((0),(1,2,4,3),(5))"),
        ((2, 4), "((0),(1,2,4),(3,6,5),(7))"),
        ((2, 5), "((0),(1,2,4,8,7,5),(3,6),(9))"),
        ((2, 6), "((0),(1,2,4,8,5,10,9,7,3,6),(11))"),
        ((3, 3), "((0),(1,3),(2,6),(4),(5,7),(8))"),
        ((3, 4), "((0),(1,3,9,5,4),(2,6,7,10,8),(11))"),
        ((3, 5), "((0),(1,3,9,13,11,5),(2,6,4,12,8,10),(7),(14))"),
    ];
    for ((d1, d2), printed) in bipartite {
        let got = cycle_decomposition(&dims(&[d1, d2]), &SubsystemPerm::swap()).unwrap();
        let want = canonicalize(&parse_cycle_notation(printed).unwrap());
        c.check(got.cycles == want, || format!("pi({d1},{d2}) = {got}, table {printed}"));
    }
    let tripartite = [
        ("((1,2),(3))", "((0),(1),(2),(3,6),(4,7),(5,8),(9),(10),(11))"),
        ("((1,3),(2))", "((0),(1,4,6),(2,8,9,3),(5,10,7),(11))"),
        ("((1),(2,3))", "((0),(1,2,4,3),(5),(6),(7,8,10,9),(11))"),
        ("(1,2,3)", "((0),(1,4,5,9,3),(2,8,10,7,6),(11))"),
        ("(1,3,2)", "((0),(1,2,4,8,5,10,9,7,3,6),(11))"),
    ];
    for (s, printed) in tripartite {
        let got = cycle_decomposition(&dims(&[2, 2, 3]), &perm(s)).unwrap();
        let want = canonicalize(&parse_cycle_notation(printed).unwrap());
        c.check(got.cycles == want, || format!("pi([2,2,3],{s}) = {got}, table {printed}"));
    }
}

fn c2_counting(c: &mut Criterion) {
    let mut missing = Vec::new();
    for d1 in 2..=12usize {
        for d2 in 2..=12usize {
            let cd = cycle_decomposition(&dims(&[d1, d2]), &SubsystemPerm::swap()).unwrap();
            let counts = cd.length_counts();
            let ls = l_star(d1 as u64, d2 as u64);
            for l in 1..=d1 * d2 {
                let enumerated = counts.get(&l).copied().unwrap_or(0) as u64;
                let formula = cycle_count(l as u64, d1 as u64, d2 as u64);
                c.check(formula == enumerated, || {
                    format!("[{d1},{d2}] l={l}: formula {formula}, enumerated {enumerated}")
                });
                let divides = ls % l as u64 == 0;
                c.check(!(enumerated > 0) || divides, || {
                    format!("[{d1},{d2}]: a {l}-cycle exists but {l} does not divide l* = {ls}")
                });
                if divides && enumerated == 0 {
                    missing.push(format!("[{d1},{d2}] l={l} (l*={ls})"));
                }
            }
        }
    }
    c.check(missing.is_empty(), || {
        format!(
            "{} divisors l of l* have no l-cycle, e.g. {}",
            missing.len(),
            missing.iter().take(4).cloned().collect::<Vec<_>>().join(", ")
        )
    });
}

fn c3_spectral_oracle(c: &mut Criterion) {
    let mut cases: Vec<(Dims, SubsystemPerm)> = bipartitions(24)
        .into_iter()
        .map(|(a, b)| (dims(&[a, b]), SubsystemPerm::swap()))
        .collect();
    for n in 8..=24u64 {
        for d in partitions_with_k(n, 3).unwrap() {
            for s in SubsystemPerm::all(3) {
                cases.push((d.clone(), s));
            }
        }
    }
    let limits = Limits::default();
    for (d, s) in cases {
        let analytic = spectrum(&d, &s).unwrap().values();
        let dense = build_operator(&d, &s).unwrap().dense(&limits).unwrap();
        let numeric = real_eigenvalues_complex(&dense);
        c.check(multiset_match(&analytic, &numeric, 1e-9), || {
            format!("{d} {s}: spectrum differs from dense eigenvalues")
        });
        let op = build_operator(&d, &s).unwrap();
        for es in all_eigenspaces(&d, &s).unwrap() {
            let r = es.max_residual(&op).unwrap();
            c.check(r <= 1e-12, || format!("{d} {s} eta={}: residual {r:e}", es.eigenvalue));
        }
    }
}

fn c4_dimensions(c: &mut Criterion) {
    let s24 = eigenspace(&dims(&[2, 4]), &SubsystemPerm::swap(), RootOfUnity::one()).unwrap();
    c.check(s24.dimension == 4, || format!("dim S1[2,4] = {}", s24.dimension));
    for (a, b) in bipartitions(60) {
        let n = cycle_decomposition(&dims(&[a, b]), &SubsystemPerm::swap()).unwrap().cycles.len();
        c.check(n >= 3, || format!("dim S1[{a},{b}] = {n}"));
    }
    for d in 2..=8usize {
        let sp = spectrum(&dims(&[d, d]), &SubsystemPerm::swap()).unwrap();
        let (s, a) = (sp.multiplicity(&RootOfUnity::one()), sp.multiplicity(&RootOfUnity::minus_one()));
        c.check(s == d * (d + 1) / 2 && a == d * (d - 1) / 2, || {
            format!("[{d},{d}]: sym {s}, antisym {a}")
        });
    }
    let a212 = eigenspace(&dims(&[2, 12]), &SubsystemPerm::swap(), RootOfUnity::minus_one()).unwrap();
    c.check(a212.dimension == 0, || format!("dim S-1[2,12] = {}", a212.dimension));
    let rows = dims_scan(29).unwrap();
    c.check(rows.len() == 28, || format!("{} scan rows", rows.len()));
    for r in &rows {
        let d = r.d as u64;
        let ls = l_star(2, d);
        let by_formula: BTreeMap<u64, u64> = (1..=ls)
            .filter(|l| ls % l == 0)
            .map(|l| (l, cycle_count(l, 2, d)))
            .collect();
        let sym: u64 = by_formula.values().sum();
        let anti: u64 = by_formula.iter().filter(|(l, _)| *l % 2 == 0).map(|(_, c)| c).sum();
        c.check(r.sym as u64 == sym && r.antisym as u64 == anti, || {
            format!("scan row d={}: ({}, {}) vs counting ({sym}, {anti})", r.d, r.sym, r.antisym)
        });
    }
    c.check((rows[0].sym, rows[0].antisym) == (3, 1), || "scan row d=2".into());
    c.check((rows[2].sym, rows[2].antisym) == (4, 0), || "scan row d=4".into());
    c.check(rows[10].antisym == 0, || "scan row d=12".into());
}

fn c5_cyclic(c: &mut Criterion) {
    let table: [(usize, usize, &[usize]); 6] = [
        (2, 3, &[4, 2, 2]),
        (2, 4, &[6, 3, 4, 3]),
        (3, 3, &[11, 8, 8]),
        (3, 4, &[24, 18, 21, 18]),
        (4, 3, &[24, 20, 20]),
        (4, 4, &[70, 60, 66, 60]),
    ];
    for (d, k, want) in table {
        let got: Vec<usize> = cyclic_shift_dims(&Dims::homogeneous(d, k).unwrap())
            .unwrap()
            .into_iter()
            .map(|(_, n)| n)
            .collect();
        c.check(got == want, || format!("[{d};{k}] cyclic dims {got:?}, table {want:?}"));
    }
    for d in 2..=5usize {
        for k in [3usize, 5] {
            let formula = cyclic_sym_dim(d as u64, k as u64).unwrap();
            let counted = cyclic_sym_dim_enumerated(d, k).unwrap() as u64;
            c.check(formula == counted, || {
                format!("(d,k)=({d},{k}): closed form {formula}, enumeration {counted}")
            });
        }
    }
}

fn c6_projectors(c: &mut Criterion) {
    let limits = Limits::default();
    for d in 2..=9usize {
        for k in 2..=6usize {
            if d.pow(k as u32) > 81 {
                continue;
            }
            let shape = Dims::homogeneous(d, k).unwrap();
            let rs = rank(&symmetric_projector(&shape, &limits).unwrap(), 1e-9);
            let ra = rank(&antisymmetric_projector(&shape, &limits).unwrap(), 1e-9);
            let (ws, wa) = (
                binomial((d + k - 1) as u64, k as u64) as usize,
                binomial(d as u64, k as u64) as usize,
            );
            c.check(rs == ws && ra == wa, || {
                format!("[{d};{k}]: ranks ({rs}, {ra}), expected ({ws}, {wa})")
            });
        }
    }
    c.check(antisymmetric_is_zero(&dims(&[2, 2, 2]), &limits).unwrap(), || {
        "A[2,2,2] is not exactly zero".into()
    });
    for shape in [dims(&[2, 3]), dims(&[2, 2, 3])] {
        let r = spectral_radius_real(&antisymmetric_projector(&shape, &limits).unwrap());
        c.check(r < 1.0 - 1e-6, || format!("spectral radius of A{shape} = {r}"));
    }
    for n in [12u64, 24] {
        for shape in all_partitions(n).unwrap().into_iter().filter(|d| d.k() >= 2) {
            let s = symmetric_projector(&shape, &limits).unwrap().map(|x| C64::new(x, 0.0));
            let n = shape.n();
            for (name, v) in [
                ("|0>", StateVector::basis(n, 0).unwrap()),
                ("|N-1>", StateVector::basis(n, n - 1).unwrap()),
                ("|Gamma_N>", gamma_state(n).unwrap()),
            ] {
                let r = (&s * v.amplitudes() - v.amplitudes()).norm();
                c.check(r <= 1e-12, || format!("S{shape} {name}: residual {r:e}"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for (d, k, ps) in [
        (2usize, 2usize, &[0.0, 0.3, 1.0][..]),
        (3, 2, &[0.0, 0.5, 0.9][..]),
        (3, 3, &[0.0, 0.25, 1.0][..]),
        (2, 3, &[1.0][..]),
    ] {
        let shape = Dims::homogeneous(d, k).unwrap();
        for &p in ps {
            let rho = rho_family(&shape, p, &limits).unwrap();
            for _ in 0..20 {
                let uk = kron_power(&random_unitary(d, &mut rng), k);
                let moved = &uk * rho.matrix() * uk.adjoint();
                let err = (moved - rho.matrix()).camax();
                c.check(err <= 1e-10, || format!("rho(p={p}) on [{d};{k}] moved by {err:e}"));
            }
        }
    }
}

fn c7_trace_distances(c: &mut Criterion) {
    let rows = trace_distance_scan(&Grid::new(0.0, 1.0, 101).unwrap()).unwrap();
    for i in 0..=50 {
        let (a, b) = (&rows[i], &rows[100 - i]);
        c.check((a.d2 - b.d2).abs() <= 1e-9 && (a.d3 - b.d3).abs() <= 1e-9, || {
            format!("asymmetry at p={}", a.p)
        });
    }
    let argmax = |f: &dyn Fn(usize) -> f64| (0..101).max_by(|&i, &j| f(i).total_cmp(&f(j))).unwrap();
    let (m2, m3) = (argmax(&|i| rows[i].d2), argmax(&|i| rows[i].d3));
    c.check(m2 == 50 && m3 == 50, || format!("maxima at p={} and p={}", rows[m2].p, rows[m3].p));
    let d3 = rows[50].d3;
    c.check((d3 - 1.0).abs() <= 1e-9, || format!("d3(1/2) = {d3}, expected 1"));

    let psi = psi_p(0.5).unwrap();
    let a = reduced_density(&psi, &dims(&[2, 3]), &[1]).unwrap();
    let b = reduced_density(&psi, &dims(&[3, 2]), &[0]).unwrap();
    let printed_a = real_diag(&[0.5, 0.0, 0.5]);
    let printed_b = real_diag(&[0.0, 1.0, 0.0]);
    let ea = (a.matrix() - &printed_a).camax();
    let eb = (b.matrix() - &printed_b).camax();
    c.check(ea <= 1e-12, || format!("[2,3] rho_2 off by {ea} entrywise: {:?}", real_rows(a.matrix())));
    c.check(eb <= 1e-12, || format!("[3,2] rho_1 off by {eb} entrywise: {:?}", real_rows(b.matrix())));

    let e23 = entanglement_e1(&psi, &dims(&[2, 3])).unwrap();
    let e32 = entanglement_e1(&psi, &dims(&[3, 2])).unwrap();
    c.check(e23 > 0.5, || format!("E[2,3](psi(1/2)) = {e23}"));
    c.check(e32 <= 1e-9, || format!("E[3,2](psi(1/2)) = {e32}"));
}

fn real_rows(m: &DMatrix<C64>) -> Vec<Vec<f64>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| (m[(i, j)].re * 1e6).round() / 1e6).collect())
        .collect()
}

fn c8_entanglement_identities(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for d in shapes_up_to(24) {
        for s in SubsystemPerm::all(d.k()) {
            for _ in 0..200 {
                let psi = haar_random_state_with(d.n(), &mut rng).unwrap();
                for t in 1..=d.k() / 2 {
                    let (before, after) = exchange_entanglement_check(&psi, &d, &s, t).unwrap();
                    c.check((before - after).abs() <= 1e-9, || {
                        format!("{d} {s} t={t}: {before} vs {after}")
                    });
                }
            }
        }
    }
    for n in [6u64, 8, 12, 24] {
        let g = gamma_state(n as usize).unwrap();
        for d in all_partitions(n).unwrap().into_iter().filter(|d| d.k() >= 2) {
            let direct = entanglement_e1(&g, &d).unwrap();
            let closed = gamma_entanglement_closed_form(&d).unwrap();
            c.check((direct - closed).abs() <= 1e-9, || {
                format!("Gamma on {d}: direct {direct}, closed form {closed}")
            });
            let ghz = ghz_like(&d).unwrap();
            let direct = entanglement_e1(&ghz, &d).unwrap();
            let closed = ghz_entanglement_closed_form(&d);
            c.check((direct - closed).abs() <= 1e-9, || {
                format!("GHZ on {d}: direct {direct}, closed form {closed}")
            });
        }
    }
    let e4 = entanglement_e1(&gamma_state(4).unwrap(), &dims(&[2, 2])).unwrap();
    c.check((e4 - 1.0).abs() <= 1e-12, || format!("E(Gamma_4) = {e4}"));
}

fn c9_ces(c: &mut Criterion) {
    for d1 in 2..=6 {
        for d2 in 2..=6 {
            let n = ces_orthocomplement_basis(d1, d2).unwrap().len();
            c.check(n == (d1 - 1) * (d2 - 1), || format!("dim R[{d1},{d2}] = {n}"));
        }
    }
    for d in 2..=7usize {
        let n = ces_intersection_qubit_qudit(d).unwrap().len();
        let want = if d % 2 == 1 { (d - 1) / 2 } else { 1 };
        c.check(n == want, || format!("d={d}: intersection dimension {n}, expected {want}"));
    }
    for d in 2..=12usize {
        let want = (d as f64 / (2.0 * d as f64 - 2.0)).sqrt();
        for v in ces_qubit_qudit_basis(d).unwrap() {
            let e = entanglement_e1(&v, &dims(&[2, d])).unwrap();
            c.check((e - want).abs() <= 1e-9, || format!("R[2,{d}] basis vector E = {e}, expected {want}"));
        }
    }
    let mut seed = 9_000;
    for (d1, d2) in bipartitions(24) {
        let shape = dims(&[d1, d2]);
        for es in all_eigenspaces(&shape, &SubsystemPerm::swap()).unwrap() {
            if es.eigenvalue.order() <= 2 {
                continue;
            }
            seed += 1;
            let m = min_entanglement_estimate(&es.vectors, &shape, 10_000, seed).unwrap();
            c.check(m >= 1e-3, || format!("[{d1},{d2}] eta={}: sampled min E1 = {m}", es.eigenvalue));
        }
    }
    for d in 2..=4usize {
        let floor = (d as f64 / (2.0 * (d as f64 - 1.0))).sqrt() - 1e-6;
        let m = min_entanglement_estimate(&antisymmetric_pairs(d).unwrap(), &dims(&[d, d]), 10_000, 90 + d as u64)
            .unwrap();
        c.check(m >= floor, || format!("A[{d},{d}] sampled min E1 = {m} below {floor}"));
    }
}

fn c10_products(c: &mut Criterion) {
    let t = |alpha, beta| ProductTerm { alpha, beta };
    let s23 = symmetric_product_constraints(2, 3).unwrap();
    let printed23 = [(t(0, 1), t(0, 2)), (t(0, 2), t(1, 1)), (t(1, 1), t(1, 0))];
    c.check(s23.equivalent_to(&printed23), || format!("(2,3) chains: {}", s23.render()));
    let s24 = symmetric_product_constraints(2, 4).unwrap();
    let printed24 = [
        (t(0, 1), t(0, 2)),
        (t(0, 2), t(1, 0)),
        (t(0, 3), t(1, 1)),
        (t(1, 1), t(1, 2)),
    ];
    c.check(s24.equivalent_to(&printed24), || format!("(2,4) chains: {}", s24.render()));
    let reduced24 = [(t(0, 1), t(0, 2)), (t(0, 1), t(1, 0)), (t(0, 3), t(1, 1))];
    c.check(s24.equivalent_to(&reduced24), || "(2,4) reduced form".into());

    for (d1, d2) in [(2usize, 3usize), (2, 6)] {
        let n = d1 * d2;
        let trivial = [
            StateVector::basis(n, 0).unwrap(),
            StateVector::basis(n, n - 1).unwrap(),
            sigma_state(n).unwrap(),
        ];
        let fams = symmetric_product_families(d1, d2).unwrap();
        c.check(fams.len() == 3, || format!("({d1},{d2}): {} families", fams.len()));
        for f in &fams {
            let known = trivial.iter().any(|s| s.equal_up_to_phase(&f.uniform, 1e-12));
            c.check(f.is_rigid() && known, || {
                format!(
                    "({d1},{d2}): family on a{:?} b{:?} with {} free parameters, {} phase components",
                    f.support_alpha, f.support_beta, f.free_parameters, f.phase_components
                )
            });
        }
    }
    let e = |n: usize, i: usize| (0..n).map(|j| C64::new(if i == j { 1.0 } else { 0.0 }, 0.0)).collect::<Vec<_>>();
    c.check(check_symmetric_product(&e(3, 1), &e(5, 2), 3, 5).unwrap(), || "|7> in (3,5)".into());
    let fixed = cycle_decomposition(&dims(&[3, 5]), &SubsystemPerm::swap())
        .unwrap()
        .cycles
        .contains(&vec![7]);
    c.check(fixed, || "(7) is not a 1-cycle of pi(3,5)".into());
}

fn c11_chi(c: &mut Criterion) {
    let psi = chi1(24, 2.0 / 24.0).unwrap();
    let reps = permsym::partitions::representatives(24).unwrap();
    let reps: Vec<Dims> = reps.into_iter().filter(|d| d.k() >= 2).collect();
    c.check(reps.len() == 6, || format!("{} representative partitions", reps.len()));
    for d in &reps {
        let e = entanglement_e1(&psi, d).unwrap();
        c.check(e <= 1e-9, || format!("chi1(2/24) on {d}: E = {e}"));
    }
    let grid = Grid::new(0.0, 1.0, 101).unwrap();
    let rows = chi_scan(24, ChiFamily::Edges, &grid, 0).unwrap();
    let prim = primitive_partition(24).unwrap();
    let two12 = dims(&[2, 12]);
    for p in grid.points() {
        let at = |d: &Dims| rows.iter().find(|r| r.p == p && &r.partition == d).unwrap().e;
        let (a, b) = (at(&prim), at(&two12));
        c.check(a >= b - 1e-9, || format!("p={p}: primitive {a} < [2,12] {b}"));
    }
    let one = chi_csv(&chi_scan(24, ChiFamily::Phase, &grid, 2024).unwrap()).render();
    let two = chi_csv(&chi_scan(24, ChiFamily::Phase, &grid, 2024).unwrap()).render();
    c.check(one == two, || "chi2 scan is not reproducible".into());
}

fn c12_coarse(c: &mut Criterion) {
    let rows = coarse_table(24, &Limits::default()).unwrap();
    c.check(rows.len() == 6, || format!("{} bipartitions", rows.len()));
    for r in &rows {
        let ok = label_perm(&r.reordered, &r.sigma2).unwrap()
            == label_perm(&r.coarse, &SubsystemPerm::swap()).unwrap();
        c.check(ok && r.verified, || format!("emitted row {} fails", r.coarse));
    }
    let printed = [
        ([2, 12], "((1),(2),(3),(4))", [2, 2, 2, 3], "(1,4,3,2)"),
        ([3, 8], "(1,2,3,4)", [3, 2, 2, 2], "(1,4,3,2)"),
        ([4, 6], "((1),(2),(3,4))", [2, 2, 3, 2], "((1,3),(2,4))"),
        ([6, 4], "((1),(2,3,4))", [2, 3, 2, 2], "((1,3),(2,4))"),
        ([8, 3], "((1),(2),(3),(4))", [2, 2, 2, 3], "(1,2,3,4)"),
        ([12, 2], "((1),(2),(3,4))", [2, 2, 3, 2], "(1,2,3,4)"),
    ];
    let dp = primitive_partition(24).unwrap();
    for (coarse, s1, reordered, s2) in printed {
        let s1 = perm(s1);
        let got = apply_perm(&s1, &dp).unwrap();
        c.check(got == dims(&reordered), || format!("{s1} applied to {dp} gives {got}"));
        let ok = label_perm(&got, &perm(s2)).unwrap()
            == label_perm(&dims(&coarse), &SubsystemPerm::swap()).unwrap();
        c.check(ok, || format!("printed pair for {:?} does not reproduce the exchange", coarse));
    }
}

fn c13_basis_type(c: &mut Criterion) {
    for d in 2..=12usize {
        let shape = dims(&[2, d]);
        let b = transformed_basis(&shape, &SubsystemPerm::swap()).unwrap();
        let ty = basis_type(&b, &shape).unwrap();
        c.check(ty == (2 * d - 2, 2), || format!("[2,{d}]: type {ty:?}"));
    }
    for d in 2..=6usize {
        let shape = dims(&[d, d]);
        let b = transformed_basis(&shape, &SubsystemPerm::swap()).unwrap();
        let ty = basis_type(&b, &shape).unwrap();
        c.check(ty == (d * d - d, d), || format!("[{d},{d}]: type {ty:?}"));
    }
}

fn main() {
    let criteria: [(&str, fn(&mut Criterion)); 13] = [
        ("cycle tables", c1_cycle_tables),
        ("closed-form cycle counts and existence", c2_counting),
        ("spectral oracle and eigenvector residuals", c3_spectral_oracle),
        ("eigenspace dimension facts", c4_dimensions),
        ("cyclic-shift table and prime-k closed form", c5_cyclic),
        ("symmetric and antisymmetric sums", c6_projectors),
        ("trace-distance curves for psi(p)", c7_trace_distances),
        ("entanglement identities", c8_entanglement_identities),
        ("completely entangled subspaces", c9_ces),
        ("symmetric product states", c10_products),
        ("chi family properties", c11_chi),
        ("N=24 coarse-graining table", c12_coarse),
        ("transformed basis types", c13_basis_type),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut c = Criterion::default();
        run(&mut c);
        let verdict = if c.failures.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {verdict}  {name} ({} checks, {:.1}s)",
            i + 1,
            c.checks,
            start.elapsed().as_secs_f64()
        );
        if !c.failures.is_empty() {
            failed += 1;
            for f in c.failures.iter().take(8) {
                println!("    {f}");
            }
            if c.failures.len() > 8 {
                println!("    .. and {} more", c.failures.len() - 8);
            }
        }
    }

    let d = dims(&[2, 2, 3]);
    let s = perm("(1,3,2)");
    let anti = eigenspace(&d, &s, RootOfUnity::minus_one()).unwrap();
    for v in &anti.vectors {
        let e1 = entanglement_e1(v, &d).unwrap();
        let cut = cut_entanglement(v, &d, &[0, 1]).unwrap();
        let et1 = entanglement_et(v, &d, 1).unwrap();
        println!("note: [2,2,3] (1,3,2) antisymmetric vector: E1 = {e1:.6}, E_t(t=1) = {et1:.6}, E across slots {{1,2}} = {cut:.6}");
    }

    println!("{} of 13 criteria passed", 13 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
