use std::path::Path;

use serde_json::{json, Value};

use lierep::bounds::{
    birkhoff_dim, denumerant, denumerant_bound, denumerant_bound_exact, integer_json, nil_defect_search,
    p_epsilon, theorem_bound, BoundReport,
};
use lierep::io::{AlgebraFile, IdealSelector};
use lierep::repbuilder::{assemble_full, QuotientModule, Representation, RepresentationJson};
use lierep::{Error, LieAlgebra, Result, Scalar, Subspace};

use crate::Command;

pub enum Outcome {
    Success,
    Failure,
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Success
        } else {
            Outcome::Failure
        }
    }
}

pub fn run(command: &Command, as_json: bool) -> Result<Outcome> {
    match command {
        Command::Validate { file } => validate(file, as_json),
        Command::Analyze { file, ideal } => analyze(file, ideal.as_deref(), as_json),
        Command::BuildRep {
            file,
            ideal,
            k1,
            k2,
            output,
            threads,
        } => {
            let job = || build_rep(file, ideal.as_deref(), *k1, *k2, output.as_deref(), as_json);
            match threads {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(*n)
                    .build()
                    .map_err(|e| Error::Parse(format!("cannot start {n} threads: {e}")))?
                    .install(job),
                None => job(),
            }
        }
        Command::VerifyRep { algebra, rep } => verify_rep(algebra, rep, as_json),
        Command::Bound {
            d,
            n,
            r,
            e1,
            e2,
            class,
        } => bound(*d, *n, *r, *e1, *e2, *class, as_json),
        Command::Denumerant { t, parts } => denumerant_cmd(*t, parts, as_json),
        Command::NilDefect { file, max_subset } => nil_defect(file, *max_subset, as_json),
    }
}

fn emit(as_json: bool, value: Value, table: &[(String, String)]) {
    if as_json {
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        let width = table.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in table {
            println!("{k:<width$}  {v}");
        }
    }
}

fn row(k: &str, v: impl ToString) -> (String, String) {
    (k.to_string(), v.to_string())
}

fn parse_selector(ideal: Option<&str>) -> Result<Option<IdealSelector>> {
    ideal.map(str::parse).transpose()
}

/// `2*x - 1/2*y`, in the algebra's labels.
fn format_vector(labels: &[String], v: &[Scalar]) -> String {
    let mut out = String::new();
    for (label, c) in labels.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let negative = c < &Scalar::zero();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn format_subspace(labels: &[String], s: &Subspace) -> String {
    let parts: Vec<String> = s.basis().iter().map(|v| format_vector(labels, v)).collect();
    format!("span{{{}}}", parts.join(", "))
}

fn subspace_json(s: &Subspace) -> Value {
    json!(s
        .basis()
        .iter()
        .map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn dims_string(dims: &[usize]) -> String {
    dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" > ")
}

fn validate(file: &Path, as_json: bool) -> Result<Outcome> {
    let f = AlgebraFile::read(file)?;
    let result = f.algebra.validate();
    let table = match &result {
        Ok(()) => vec![row("algebra", f.algebra.name()), row("jacobi", "ok")],
        Err(v) => vec![row("algebra", f.algebra.name()), row("jacobi", v)],
    };
    let value = match &result {
        Ok(()) => json!({"algebra": f.algebra.name(), "valid": true}),
        Err(v) => json!({
            "algebra": f.algebra.name(),
            "valid": false,
            "triple": [v.i, v.j, v.k],
            "labels": [&f.algebra.labels()[v.i], &f.algebra.labels()[v.j], &f.algebra.labels()[v.k]],
            "defect": v.defect.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        }),
    };
    emit(as_json, value, &table);
    Ok(Outcome::from_bool(result.is_ok()))
}

fn analyze(file: &Path, ideal: Option<&str>, as_json: bool) -> Result<Outcome> {
    let f = AlgebraFile::read(file)?;
    let g = &f.algebra;
    if let Err(v) = g.validate() {
        eprintln!("{v}");
        return Ok(Outcome::Failure);
    }
    let full = g.full_space();
    let lcs: Vec<usize> = g.lower_central_series(&full)?.iter().map(Subspace::dim).collect();
    let class = g.nilpotency_class(&full).ok();
    let center = g.center().dim();
    let radical = g.killing_radical().dim();
    let mut table = vec![
        row("algebra", g.name()),
        row("dim", g.dim()),
        row("lower central series", dims_string(&lcs)),
        row("class", class.map_or("not nilpotent".to_string(), |c| c.to_string())),
        row("center dim", center),
        row("radical dim", radical),
    ];
    let mut value = json!({
        "algebra": g.name(),
        "dim": g.dim(),
        "lower_central_series": lcs,
        "class": class,
        "center_dim": center,
        "radical_dim": radical,
    });

    let selector = parse_selector(ideal)?;
    let has_split = f.decomposition.is_some() || class.is_some();
    if has_split {
        let decomposition = f.decomposition(selector.as_ref())?;
        let q = QuotientModule::with_defaults(&decomposition)?;
        let mm = q.filtration_mm().dims();
        let mh = q.filtration_mh().dims();
        let basis: Vec<String> = q.m_basis().iter().map(|v| format_vector(g.labels(), v)).collect();
        table.extend([
            row("m", format_subspace(g.labels(), decomposition.m())),
            row("h", format_subspace(g.labels(), decomposition.h())),
            row("(m,m) filtration", dims_string(&mm)),
            row("(m,h) filtration", dims_string(&mh)),
            row("adapted basis", basis.join(", ")),
            row("weights (m,m)", q.weights_mm()),
            row("weights (m,h)", q.weights_mh()),
        ]);
        value["m"] = subspace_json(decomposition.m());
        value["h"] = subspace_json(decomposition.h());
        value["filtration_mm"] = json!(mm);
        value["filtration_mh"] = json!(mh);
        value["adapted_basis"] = json!(basis);
        value["weights_mm"] = json!(q.weights_mm().0.iter().map(|w| w.to_string()).collect::<Vec<_>>());
        value["weights_mh"] = json!(q.weights_mh().0.iter().map(|w| w.to_string()).collect::<Vec<_>>());
    } else if selector.is_some() {
        return Err(Error::InvalidDecomposition(
            "the algebra is not nilpotent and the file gives no decomposition".into(),
        ));
    }
    emit(as_json, value, &table);
    Ok(Outcome::Success)
}

fn build_rep(
    file: &Path,
    ideal: Option<&str>,
    k1: Option<u64>,
    k2: Option<u64>,
    output: Option<&Path>,
    as_json: bool,
) -> Result<Outcome> {
    let f = AlgebraFile::read(file)?;
    let g = &f.algebra;
    if let Err(v) = g.validate() {
        eprintln!("{v}");
        return Ok(Outcome::Failure);
    }
    let selector = parse_selector(ideal)?;
    let decomposition = f.decomposition(selector.as_ref())?;
    let k1 = k1.unwrap_or(decomposition.class_m() as u64 + 1);
    let k2 = k2.unwrap_or(decomposition.class_h() as u64 + 1);
    let assembly = assemble_full(&decomposition, k1, k2)?;
    let rep = &assembly.representation;
    let homomorphism = rep.verify_homomorphism(g).is_ok();
    let faithful = rep.verify_faithful(g).is_ok();
    let report = BoundReport::new(rep.degree(), f.bound_inputs(&decomposition))?;

    let rep_text = serde_json::to_string_pretty(&rep.to_json()).expect("json") + "\n";
    match output {
        Some(path) => std::fs::write(path, &rep_text)
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{rep_text}"),
    }

    let table = vec![
        row("algebra", g.name()),
        row("k1, k2", format!("{k1}, {k2}")),
        row("p0 dim", assembly.p0.dim()),
        row("degree", rep.degree()),
        row("quotient degree", assembly.quotient_degree),
        row("reductive degree", assembly.reductive_degree),
        row("homomorphism", homomorphism),
        row("faithful", faithful),
        row("prop_bound", &report.prop_bound),
        row("theorem_bound", &report.theorem_bound),
        row("birkhoff", &report.birkhoff),
    ];
    let mut value = json!({
        "algebra": g.name(),
        "k1": k1,
        "k2": k2,
        "p0_dim": assembly.p0.dim(),
        "degree": rep.degree(),
        "quotient_degree": assembly.quotient_degree,
        "reductive_degree": assembly.reductive_degree,
        "homomorphism": homomorphism,
        "faithful": faithful,
        "report": serde_json::to_value(&report).expect("json"),
    });
    if let Some(path) = output {
        value["output"] = json!(path.display().to_string());
    }
    // with the representation on stdout the summary goes to stderr
    if output.is_some() {
        emit(as_json, value, &table);
    } else if as_json {
        eprintln!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        for (k, v) in &table {
            eprintln!("{k}: {v}");
        }
    }
    Ok(Outcome::Success)
}

fn verify_rep(algebra: &Path, rep: &Path, as_json: bool) -> Result<Outcome> {
    let f = AlgebraFile::read(algebra)?;
    let text = std::fs::read_to_string(rep).map_err(|e| Error::Parse(format!("cannot read {}: {e}", rep.display())))?;
    let stored: RepresentationJson = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let r = Representation::from_json(&stored, &f.algebra)?;
    let hom = r.verify_homomorphism(&f.algebra);
    let faithful = r.verify_faithful(&f.algebra);
    let g: &LieAlgebra = &f.algebra;
    let kernel = faithful.as_ref().err().map(|k| Subspace::span(g.dim(), k));
    let table = vec![
        row("algebra", g.name()),
        row("degree", r.degree()),
        row(
            "homomorphism",
            hom.as_ref().map_or_else(|e| e.to_string(), |_| "ok".to_string()),
        ),
        row(
            "faithful",
            kernel
                .as_ref()
                .map_or("ok".to_string(), |k| format!("kernel {}", format_subspace(g.labels(), k))),
        ),
    ];
    let value = json!({
        "algebra": g.name(),
        "degree": r.degree(),
        "homomorphism": hom.is_ok(),
        "homomorphism_failure": hom.as_ref().err().map(|e| [e.i, e.j]),
        "faithful": faithful.is_ok(),
        "kernel": kernel.as_ref().map(subspace_json),
    });
    emit(as_json, value, &table);
    Ok(Outcome::from_bool(hom.is_ok() && faithful.is_ok()))
}

fn bound(d: u64, n: u64, r: u64, e1: u64, e2: u64, class: Option<u64>, as_json: bool) -> Result<Outcome> {
    let value_t = theorem_bound(d, n, r, e1, e2)?;
    let poly = p_epsilon(e1 + e2, d);
    let birkhoff = class.map(|c| birkhoff_dim(d, c)).transpose()?;
    let mut table = vec![
        row("d, n, r", format!("{d}, {n}, {r}")),
        row("e1, e2", format!("{e1}, {e2}")),
        row("theorem_bound", &value_t),
        row("p_epsilon", &poly),
    ];
    if let Some(b) = &birkhoff {
        table.push(row("birkhoff", b));
    }
    let value = json!({
        "d": d, "n": n, "r": r, "e1": e1, "e2": e2,
        "theorem_bound": integer_json(&value_t),
        "p_epsilon": integer_json(&poly),
        "birkhoff": birkhoff.as_ref().map(integer_json),
    });
    emit(as_json, value, &table);
    Ok(Outcome::Success)
}

fn denumerant_cmd(t: u64, parts: &[u64], as_json: bool) -> Result<Outcome> {
    let count = denumerant(t, parts).map_err(|_| Error::Parse("parts must be positive".into()))?;
    let p = parts.len() as u64;
    let lemma = denumerant_bound(t, p);
    let exact = denumerant_bound_exact(t, p);
    let table = vec![
        row("t", t),
        row("parts", format!("{parts:?}")),
        row("denumerant", &count),
        row("binom(p+t-1, t-1)", &lemma),
        row("binom(p+t-1, t)", &exact),
    ];
    let value = json!({
        "t": t,
        "parts": parts,
        "denumerant": integer_json(&count),
        "lemma_bound": integer_json(&lemma),
        "exact_bound": integer_json(&exact),
    });
    emit(as_json, value, &table);
    Ok(Outcome::Success)
}

fn nil_defect(file: &Path, max_subset: usize, as_json: bool) -> Result<Outcome> {
    let f = AlgebraFile::read(file)?;
    let g = &f.algebra;
    let radical = g.killing_radical();
    let (eps, witness) = nil_defect_search(g, &radical, max_subset)?;
    let table = vec![
        row("algebra", g.name()),
        row("radical dim", radical.dim()),
        row("nil-defect <=", eps),
        row("witness", format_subspace(g.labels(), &witness)),
    ];
    let value = json!({
        "algebra": g.name(),
        "radical_dim": radical.dim(),
        "nil_defect_upper_bound": eps,
        "witness": subspace_json(&witness),
    });
    emit(as_json, value, &table);
    Ok(Outcome::Success)
}
