//! End-to-end acceptance checks. Every comparison is exact. Each criterion
//! prints one PASS/FAIL line; the process fails if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use lierep::bounds::{denumerant, denumerant_bound, nil_defect_search, prop_bound, theorem_bound};
use lierep::exactalg::axpy;
use lierep::filtration::{adapt_two_flags, Weight};
use lierep::io::{builtin_catalog, AlgebraFile, IdealSelector};
use lierep::liealg::examples::{heisenberg3, standard_filiform};
use lierep::pbw::{Derivation, EnvelopingAlgebra, Monomial, UElement};
use lierep::repbuilder::{
    assemble_full, build_quotient_rep, build_quotient_rep_default, split_p0, Decomposition, QuotientModule,
    Representation,
};
use lierep::{Matrix, Scalar, Subspace, Vector};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
}

fn catalog_path(name: &str) -> PathBuf {
    catalog_dir().join(format!("{name}.json"))
}

fn catalog() -> Vec<AlgebraFile> {
    builtin_catalog()
        .iter()
        .map(|f| AlgebraFile::read(&catalog_path(f.algebra.name())).expect("catalog file"))
        .collect()
}

fn decompositions() -> Vec<(String, Decomposition)> {
    let mut out = Vec::new();
    for f in catalog() {
        for (tag, sel) in [("h=m", IdealSelector::Full), ("h=Z(m)", IdealSelector::Center)] {
            let d = f.decomposition(Some(&sel)).expect("catalog decomposition");
            out.push((format!("{} {tag}", f.algebra.name()), d));
        }
    }
    out
}

/// Pascal's triangle, independent of the multiplicative formula.
fn pascal(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::from(0u32);
    }
    let mut row = vec![BigUint::from(1u32)];
    for _ in 0..n {
        let mut next = vec![BigUint::from(1u32); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row[k as usize].clone()
}

fn criterion_1() -> Outcome {
    let total = Instant::now();
    let (mut checked, mut split) = (0, 0);
    for (name, d) in decompositions() {
        let g = d.algebra().clone();
        let start = Instant::now();
        let (p0, _) = split_p0(&d);
        if p0.is_zero() {
            let r = build_quotient_rep_default(&d).map_err(|e| format!("{name}: {e}"))?;
            ensure(r.verify_homomorphism(&g).is_ok(), || format!("{name}: homomorphism law fails"))?;
            ensure(r.verify_faithful(&g).is_ok(), || format!("{name}: not faithful"))?;
        } else {
            // p does not act faithfully: the quotient kills exactly p0 and the
            // assembly restores faithfulness
            let q = QuotientModule::with_defaults(&d)
                .and_then(|q| q.representation())
                .map_err(|e| format!("{name}: {e}"))?;
            ensure(q.verify_homomorphism(&g).is_ok(), || format!("{name}: homomorphism law fails"))?;
            let kernel = Subspace::span(g.dim(), &q.verify_faithful(&g).err().unwrap_or_default());
            ensure(kernel == p0, || format!("{name}: quotient kernel {kernel:?} is not p0 {p0:?}"))?;
            let a = assemble_full(&d, d.class_m() as u64 + 1, d.class_h() as u64 + 1)
                .map_err(|e| format!("{name}: {e}"))?;
            ensure(a.representation.verify_homomorphism(&g).is_ok(), || {
                format!("{name}: assembled homomorphism law fails")
            })?;
            ensure(a.representation.verify_faithful(&g).is_ok(), || format!("{name}: assembly not faithful"))?;
            split += 1;
        }
        let took = start.elapsed();
        ensure(took < Duration::from_secs(5), || format!("{name}: took {took:?}"))?;
        checked += 1;
    }
    let took = total.elapsed();
    ensure(took < Duration::from_secs(60), || format!("catalog took {took:?}"))?;
    Ok(format!(
        "{checked} decompositions faithful in {:.2}s ({split} with p0 != 0 checked as kernel = p0 plus assembly)",
        took.as_secs_f64()
    ))
}

fn criterion_2() -> Outcome {
    let mut cases = 0;
    for (name, d) in decompositions() {
        let q = QuotientModule::with_defaults(&d).map_err(|e| format!("{name}: {e}"))?;
        let (dm, dh) = (d.m().dim() as u64, d.h().dim() as u64);
        let bound = prop_bound(dm, dm - dh, d.class_h() as u64);
        let oracle = pascal(2 * dm - dh, (dm - dh) as i64) * pascal(dm + d.class_h() as u64, d.class_h() as i64);
        ensure(bound == oracle, || format!("{name}: prop_bound {bound} vs binomial oracle {oracle}"))?;
        ensure(BigUint::from(q.dim()) <= bound, || format!("{name}: dim {} > {bound}", q.dim()))?;
        cases += 1;
    }
    let d = Decomposition::nilpotent(heisenberg3(), None).map_err(|e| e.to_string())?;
    let dim = QuotientModule::with_defaults(&d).map_err(|e| e.to_string())?.dim();
    let bound = prop_bound(3, 0, 2);
    ensure(dim == 7 && bound == BigUint::from(10u32), || format!("heisenberg3: {dim} <= {bound}"))?;
    Ok(format!("{cases} cases within bound; heisenberg3 {dim} <= {bound}"))
}

fn criterion_3() -> Outcome {
    let h = heisenberg3();
    let d = Decomposition::nilpotent(h.clone(), None).map_err(|e| e.to_string())?;
    let r = build_quotient_rep(&d, 2, d.class_h() as u64 + 1).map_err(|e| e.to_string())?;
    ensure(r.verify_homomorphism(&h).is_ok(), || "homomorphism law fails".into())?;
    let kernel = r.verify_faithful(&h).err().ok_or("representation is faithful")?;
    let kernel = Subspace::span(3, &kernel);
    ensure(kernel == Subspace::coordinate(3, &[2]), || format!("kernel {kernel:?}"))?;
    Ok(format!("k1 = 2 gives degree {} with kernel span{{z}}", r.degree()))
}

fn criterion_4() -> Outcome {
    let check = |args: (u64, u64, u64, u64, u64), expected: u64| -> Result<(), String> {
        let (d, n, r, e1, e2) = args;
        let got = theorem_bound(d, n, r, e1, e2).map_err(|e| e.to_string())?;
        let oracle = BigUint::from(d - n) + pascal(r + e1, e1 as i64) * pascal(r + e2, e2 as i64);
        ensure(got == BigUint::from(expected) && got == oracle, || {
            format!("theorem_bound{args:?} = {got}, oracle {oracle}, expected {expected}")
        })
    };
    check((3, 3, 3, 2, 0), 10)?;
    check((1, 1, 1, 1, 0), 2)?;
    for d in 0..=30 {
        check((d, 0, 0, 0, 0), d + 1)?;
    }
    Ok("(3,3,3,2,0) = 10, (1,1,1,1,0) = 2, (d,0,0,0,0) = d+1 for d <= 30".into())
}

fn small(rng: &mut StdRng) -> Scalar {
    Scalar::from_int(rng.gen_range(-3..=3))
}

fn random_element(rng: &mut StdRng, n: usize, max_len: u32) -> UElement {
    let mut x = UElement::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let mut e = vec![0u32; n];
        for _ in 0..rng.gen_range(0..=max_len) {
            e[rng.gen_range(0..n)] += 1;
        }
        x.add_term(Monomial::from_exponents(e), small(rng));
    }
    x
}

fn random_in(rng: &mut StdRng, s: &Subspace) -> Vector {
    let mut v = vec![Scalar::zero(); s.ambient_dim()];
    for b in s.basis() {
        axpy(&mut v, &small(rng), &b);
    }
    v
}

fn modules() -> Vec<(String, QuotientModule, EnvelopingAlgebra)> {
    decompositions()
        .into_iter()
        .filter(|(_, d)| !d.m().is_zero())
        .map(|(name, d)| {
            let q = QuotientModule::with_defaults(&d).expect("quotient");
            let u = EnvelopingAlgebra::new(q.m_algebra().clone());
            (name, q, u)
        })
        .collect()
}

fn criterion_5() -> Outcome {
    let mods = modules();
    let mut rng = StdRng::seed_from_u64(5);
    for sample in 0..200 {
        let (name, q, u) = &mods[rng.gen_range(0..mods.len())];
        let d = q.decomposition();
        let n = u.dim();
        let x = random_element(&mut rng, n, 4);
        let y = random_element(&mut rng, n, 4);
        let v = random_in(&mut rng, d.m());
        let delta = random_in(&mut rng, d.p());
        let der = Derivation::from_adjoint(d.algebra(), q.m_basis(), &delta).map_err(|e| e.to_string())?;
        let v_coords = q.m_coordinates(&v).ok_or("x not in m")?;
        for (tag, f, w) in [
            ("(m,m)", q.filtration_mm(), q.weights_mm()),
            ("(m,h)", q.filtration_mh(), q.weights_mh()),
        ] {
            let at = |cond: bool, which: &str| {
                ensure(cond, || format!("sample {sample} on {name}, {tag}: condition {which} fails"))
            };
            at(UElement::zero().weight(w) == Weight::Infinite, "1 (zero)")?;
            at(x.is_zero() == (x.weight(w) == Weight::Infinite), "1 (nonzero)")?;
            at(x.add(&y).weight(w) >= x.weight(w).min(y.weight(w)), "2")?;
            let wx = f.weight_of(&v).ok_or("x not in m")?;
            at(u.left_mult(&v_coords, &x).weight(w) >= wx + x.weight(w), "3")?;
            at(u.derive(&der, &x).weight(w) >= x.weight(w), "4")?;
        }
    }
    Ok(format!("200 samples over {} decompositions, both weights", mods.len()))
}

fn criterion_6() -> Outcome {
    let mods = modules();
    let mut rng = StdRng::seed_from_u64(6);
    for sample in 0..200 {
        let (name, q, u) = &mods[rng.gen_range(0..mods.len())];
        let d = q.decomposition();
        let n = u.dim();
        let x = random_element(&mut rng, n, 4);
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let lhs = u
            .straighten_mult(i, &u.straighten_mult(j, &x))
            .sub(&u.straighten_mult(j, &u.straighten_mult(i, &x)));
        let rhs = u.left_mult(&u.lie_algebra().bracket_basis(i, j), &x);
        ensure(lhs == rhs, || format!("sample {sample} on {name}: bracket compatibility fails"))?;

        let source = if d.p().is_zero() { d.m() } else { d.p() };
        let delta = random_in(&mut rng, source);
        let der = Derivation::from_adjoint(d.algebra(), q.m_basis(), &delta).map_err(|e| e.to_string())?;
        let image = d.algebra().bracket(&delta, &q.m_basis()[i]).map_err(|e| e.to_string())?;
        let image = q.m_coordinates(&image).ok_or("[delta, x] leaves m")?;
        let lhs = u.derive(&der, &u.straighten_mult(i, &x));
        let rhs = u.left_mult(&image, &x).add(&u.straighten_mult(i, &u.derive(&der, &x)));
        ensure(lhs == rhs, || format!("sample {sample} on {name}: derivation law fails"))?;
    }
    Ok("200 samples: bracket compatibility and derivation law".into())
}

fn brute_force_denumerant(t: u64, parts: &[u64]) -> u64 {
    fn go(t: u64, parts: &[u64]) -> u64 {
        match parts.split_first() {
            None => u64::from(t == 0),
            Some((&m, rest)) => (0..=t / m).map(|a| go(t - a * m, rest)).sum(),
        }
    }
    go(t, parts)
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    let mut violations = Vec::new();
    for _ in 0..100 {
        let size = rng.gen_range(1..=6);
        let parts: Vec<u64> = (0..size).map(|_| rng.gen_range(1..=6)).collect();
        for t in 1..=12u64 {
            let delta = denumerant(t, &parts).map_err(|e| e.to_string())?;
            let p = parts.len() as u64;
            let bound = denumerant_bound(t, p);
            ensure(bound == pascal(p + t - 1, t as i64 - 1), || format!("denumerant_bound({t}, {p})"))?;
            if size <= 4 && t <= 8 {
                let oracle = BigUint::from(brute_force_denumerant(t, &parts));
                ensure(delta == oracle, || format!("DP {delta} vs brute force {oracle} at t={t}, M={parts:?}"))?;
            }
            if delta > bound {
                violations.push(format!("t={t}, M={parts:?}: {delta} > {bound}"));
            }
        }
    }
    ensure(violations.is_empty(), || {
        format!(
            "{} (t, M) pairs exceed binom(|M|+t-1, t-1); first: {}",
            violations.len(),
            violations[0]
        )
    })?;
    Ok("100 multisets, 1 <= t <= 12".into())
}

/// Partition numbers by Euler's pentagonal recurrence.
fn partitions_oracle(max: usize) -> Vec<i64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for n in 1..=max {
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[n] += sign * p[n - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                p[n] += sign * p[n - g2];
            }
            k += 1;
        }
    }
    p
}

fn criterion_8() -> Outcome {
    let p = partitions_oracle(10);
    for k in 1..=10u64 {
        let parts: Vec<u64> = (1..=k).collect();
        for t in 0..=k {
            let got = denumerant(t, &parts).map_err(|e| e.to_string())?;
            ensure(got == BigUint::from(p[t as usize] as u64), || {
                format!("denumerant({t}, 1..{k}) = {got}, p({t}) = {}", p[t as usize])
            })?;
        }
    }
    Ok(format!("t <= k <= 10, p(10) = {}", p[10]))
}

fn criterion_9() -> Outcome {
    for d in 4..=9usize {
        let f = standard_filiform(d);
        let (eps, witness) = nil_defect_search(&f, &f.full_space(), 2).map_err(|e| e.to_string())?;
        let expected = Subspace::coordinate(d, &(1..d).collect::<Vec<_>>());
        ensure(eps == 2, || format!("filiform{d}: eps = {eps}"))?;
        ensure(witness == expected, || format!("filiform{d}: witness {witness:?}"))?;
        ensure(matches!(f.nilpotency_class(&witness), Ok(1)), || format!("filiform{d}: witness not abelian"))?;
        // eps <= 2 sqrt(d) + 1  <=>  (eps - 1)^2 <= 4d
        ensure(((eps - 1) * (eps - 1)) <= 4 * d, || format!("filiform{d}: {eps} > 2 sqrt(d) + 1"))?;
    }
    Ok("filiform 4..9: eps = 2, witness span{e2..ed}".into())
}

fn random_flag(rng: &mut StdRng, n: usize) -> Vec<Subspace> {
    let vectors: Vec<Vector> = (0..n)
        .map(|_| (0..n).map(|_| Scalar::from_int(rng.gen_range(-2..=2))).collect())
        .collect();
    let mut flag = vec![Subspace::full(n)];
    let mut k = n;
    while k > 0 {
        k = rng.gen_range(0..k);
        let s = Subspace::span(n, &vectors[..k]);
        if &s != flag.last().expect("nonempty") {
            flag.push(s);
        }
    }
    if !flag.last().expect("nonempty").is_zero() {
        flag.push(Subspace::zero(n));
    }
    flag
}

fn criterion_10() -> Outcome {
    let mut rng = StdRng::seed_from_u64(10);
    for pair in 0..100 {
        let n = rng.gen_range(1..=6);
        let a = random_flag(&mut rng, n);
        let b = random_flag(&mut rng, n);
        let basis = adapt_two_flags(&a, &b).map_err(|e| format!("pair {pair}: {e}"))?;
        ensure(basis.len() == n && Matrix::from_rows(n, &basis).rank() == n, || {
            format!("pair {pair}: not a basis")
        })?;
        for s in a.iter().chain(&b) {
            let inside: Vec<Vector> = basis.iter().filter(|v| s.contains(v)).cloned().collect();
            ensure(inside.len() == s.dim() && Subspace::span(n, &inside) == *s, || {
                format!("pair {pair}: a flag space of dim {} is not spanned by a subset", s.dim())
            })?;
        }
    }
    Ok("100 random flag pairs in dim <= 6".into())
}

fn run_cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_lierep"))
        .args(args)
        .output()
        .expect("spawn lierep")
}

fn criterion_11() -> Outcome {
    let path = catalog_path("solvable5");
    let f = AlgebraFile::read(&path).map_err(|e| e.to_string())?;
    let g = &f.algebra;
    let d = f.decomposition(None).map_err(|e| e.to_string())?;
    let (p0, _) = split_p0(&d);
    ensure(!p0.is_zero(), || "p0 is zero".into())?;
    let a = assemble_full(&d, d.class_m() as u64 + 1, d.class_h() as u64 + 1).map_err(|e| e.to_string())?;
    ensure(a.representation.verify_homomorphism(g).is_ok(), || "homomorphism law fails".into())?;
    ensure(a.representation.verify_faithful(g).is_ok(), || "assembly not faithful".into())?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = dir.path().join("solvable5.rep.json");
    let built = run_cli(&["build-rep", path_str(&path), "--output", path_str(&out)]);
    ensure(built.status.success(), || format!("build-rep exit {:?}", built.status.code()))?;
    let text = std::fs::read_to_string(&out).map_err(|e| e.to_string())?;
    let stored = Representation::from_json(&serde_json::from_str(&text).map_err(|e| e.to_string())?, g)
        .map_err(|e| e.to_string())?;
    ensure(stored == a.representation, || "file differs from assemble_full".into())?;
    let verified = run_cli(&["verify-rep", "--algebra", path_str(&path), path_str(&out)]);
    ensure(verified.status.code() == Some(0), || format!("verify-rep exit {:?}", verified.status.code()))?;
    Ok(format!(
        "degree {} = {} + {}, verify-rep exit 0",
        stored.degree(),
        a.reductive_degree,
        a.quotient_degree
    ))
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("faithful quotient on the catalog", criterion_1),
        ("module dimension within prop_bound", criterion_2),
        ("threshold sharpness on heisenberg3", criterion_3),
        ("theorem bound calculator", criterion_4),
        ("weight axioms", criterion_5),
        ("module laws", criterion_6),
        ("denumerant lemma", criterion_7),
        ("partition identity", criterion_8),
        ("nil-defect of standard filiform", criterion_9),
        ("two-flag adaptation", criterion_10),
        ("assembly round trip", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
