use std::io::Write;
use std::path::Path;

use inseg_core::homogeneity::{
    homogeneity_check, relation_preserving_maps, RelStructure, DEFAULT_MAX_MAPS,
};
use inseg_core::io::{self, canonical_json, GraphFile};
use inseg_core::order::{
    check_busl_axioms, galois_adjoint, is_ideal, make_standard, quotient_by_ideal,
    quotient_presentation, Ideal,
};
use inseg_core::partition::{clfa_verify, congruence_lattice};
use inseg_core::pudlak::{render_dot, rep_verify, Outcome};
use inseg_core::tree::{build_g, check_reduction, Nest, Reduction, StringIter, ThetaString};
use inseg_core::{Error, RepSequence, Result};
use serde_json::{json, Value};

use crate::cli::Command;

/// Whether the checks a command performs came out clean.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
}

const TRACE_STRINGS: usize = 256;

fn env_cap(name: &str, default: usize) -> Result<usize> {
    match std::env::var(name) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Format(format!("{name}={v:?} is not a number"))),
        Err(_) => Ok(default),
    }
}

fn max_vertices(flag: Option<usize>) -> Result<usize> {
    flag.map_or_else(|| env_cap("INSEG_MAX_VERTICES", 50_000), Ok)
}

/// Writes to `out` through a temporary file in the same directory, or to stdout.
fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    let io_err = |path: &Path, e: std::io::Error| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    match out {
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| io_err(Path::new("<stdout>"), e)),
        Some(path) => {
            let dir = path
                .parent()
                .filter(|d| !d.as_os_str().is_empty())
                .unwrap_or(Path::new("."));
            let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| io_err(dir, e))?;
            tmp.write_all(text.as_bytes())
                .map_err(|e| io_err(path, e))?;
            tmp.persist(path).map_err(|e| io_err(path, e.error))?;
            Ok(())
        }
    }
}

fn emit_json(out: Option<&Path>, v: &Value) -> Result<()> {
    emit(out, &canonical_json(v)?)
}

fn to_value<T: serde::Serialize>(v: &T) -> Result<Value> {
    Ok(serde_json::to_value(v)?)
}

pub fn run(cmd: Command) -> Result<Status> {
    match cmd {
        Command::LatticeCheck { file, out } => {
            let table = io::load_usl_table(&file)?;
            let report = check_busl_axioms(&table)?;
            emit(out.as_deref(), &report.to_string())?;
            if let Some(f) = report.first_failure() {
                eprintln!("axioms fail: eq {} ({})", f.equation, f.law);
                return Ok(Status::Failed);
            }
            Ok(Status::Ok)
        }
        Command::LatticeMake { family, size, out } => {
            let l = make_standard(family, size)?;
            emit(out.as_deref(), &io::lattice_json(&l)?)?;
            Ok(Status::Ok)
        }
        Command::LatticeDual { file, out } => {
            let l = io::load_lattice(&file)?;
            emit(out.as_deref(), &io::lattice_json(&l.dual())?)?;
            Ok(Status::Ok)
        }
        Command::Adjoint { hom, out } => {
            let phi = io::load_hom(&hom)?;
            let adj = galois_adjoint(&phi)?;
            let back = galois_adjoint(&adj)?;
            let involutive = back.map() == phi.map();
            emit_json(
                out.as_deref(),
                &json!({ "map": adj.map(), "kind": to_value(&adj.kind())?, "involutive": involutive }),
            )?;
            Ok(if involutive {
                Status::Ok
            } else {
                Status::Failed
            })
        }
        Command::Quotient {
            lattice,
            ideal,
            out,
        } => {
            let l = io::load_lattice(&lattice)?;
            if let Some(v) = is_ideal(&l, &ideal) {
                emit_json(
                    out.as_deref(),
                    &json!({ "ideal": false, "violation": to_value(&v)? }),
                )?;
                eprintln!("not an ideal: {v:?}");
                return Ok(Status::Failed);
            }
            let q = quotient_by_ideal(&l, &Ideal::new(&l, &ideal)?)?;
            emit_json(
                out.as_deref(),
                &json!({ "ideal": true, "classes": q.classes, "lattice": to_value(&q.lattice.to_table())? }),
            )?;
            Ok(Status::Ok)
        }
        Command::Present { file, out } => {
            let p = io::load_presentation(&file)?;
            let q = quotient_presentation(&p)?;
            emit_json(
                out.as_deref(),
                &json!({ "classes": q.classes, "usl": to_value(&q.usl.to_table())? }),
            )?;
            Ok(Status::Ok)
        }
        Command::Congruence { algebra, out } => {
            let alg = io::load_algebra(&algebra)?;
            let con = congruence_lattice(&alg, env_cap("INSEG_MAX_ALGEBRA", 16)?)?;
            emit_json(out.as_deref(), &to_value(&con.report())?)?;
            Ok(Status::Ok)
        }
        Command::Clfa {
            lattice,
            algebra,
            out,
        } => {
            let l = io::load_lattice(&lattice)?;
            let alg = io::load_algebra(&algebra)?;
            let v = clfa_verify(&l, &alg, env_cap("INSEG_MAX_ALGEBRA", 16)?)?;
            let report = json!({ "holds": v.holds(), "isomorphism": v.witness, "congruences": to_value(&v.congruences.report())? });
            emit_json(out.as_deref(), &report)?;
            match &v.witness {
                Some(w) => eprintln!("isomorphism congruence -> lattice: {w:?}"),
                None => eprintln!(
                    "congruence lattice ({} members) is not isomorphic to the lattice",
                    v.congruences.len()
                ),
            }
            Ok(if v.holds() {
                Status::Ok
            } else {
                Status::Failed
            })
        }
        Command::PudlakBuild {
            lattice,
            stages,
            seed_color,
            rule_variant,
            max_vertices: cap,
            out,
        } => {
            let l = io::load_lattice(&lattice)?;
            let seed = seed_color.unwrap_or_else(|| l.top());
            let r = RepSequence::build(l, seed, rule_variant, stages + 1, max_vertices(cap)?)?;
            let reference = match &out {
                Some(o) => io::reference_from(o, &lattice),
                None => lattice.display().to_string(),
            };
            emit_json(
                out.as_deref(),
                &to_value(&GraphFile::from_graph(r.graph(), &reference))?,
            )?;
            eprintln!("stages 0..={stages}: vertices {:?}", r.vertex_counts());
            Ok(Status::Ok)
        }
        Command::PudlakVerify {
            graph,
            depth,
            join_bound,
            rule_variant,
            out,
        } => {
            let (l, g) = io::load_graph(&graph)?;
            let r = RepSequence::from_graph(l, g, rule_variant)?;
            let report = rep_verify(&r, depth.unwrap_or(r.last_stage()))?;
            let outcome = report.outcome(join_bound);
            let mut v = to_value(&report)?;
            v["outcome"] = to_value(&outcome)?;
            v["max_join_depth"] = json!(report.max_join_depth());
            emit_json(out.as_deref(), &v)?;
            eprintln!("outcome: {}", v["outcome"].as_str().unwrap_or("?"));
            Ok(if outcome == Outcome::Fail {
                Status::Failed
            } else {
                Status::Ok
            })
        }
        Command::Homogeneity {
            structure,
            algebra,
            out,
        } => {
            let s = match (structure, algebra) {
                (Some(p), _) => io::load_structure(&p)?,
                (None, Some(a)) => RelStructure::congruences(
                    &io::load_algebra(&a)?,
                    env_cap("INSEG_MAX_ALGEBRA", 16)?,
                )?,
                (None, None) => {
                    return Err(Error::Format(
                        "one of --structure or --algebra is required".into(),
                    ))
                }
            };
            let maps = relation_preserving_maps(
                &s,
                env_cap("INSEG_MAX_MAPS_CARRIER", 12)?,
                DEFAULT_MAX_MAPS,
            )?;
            let report = homogeneity_check(&s, &maps);
            let verified = report.witnesses.iter().all(|w| w.verify(&s));
            let mut v = to_value(&report)?;
            v["witnesses_verified"] = json!(verified);
            v["order_violations"] = json!(s.order_violations());
            emit_json(out.as_deref(), &v)?;
            match report.counterexample {
                Some(q) => eprintln!("not homogeneous: counterexample {q:?}"),
                None => eprintln!("homogeneous; longest chain {}", report.max_chain_length),
            }
            Ok(if report.homogeneous && verified {
                Status::Ok
            } else {
                Status::Failed
            })
        }
        Command::TreeDemo {
            lattice,
            levels,
            branch,
            shift,
            stages,
            rule_variant,
            max_vertices: cap,
            out,
        } => {
            let l = io::load_lattice(&lattice)?;
            let dual = l.dual();
            let seed = dual.top();
            let base =
                RepSequence::build(dual, seed, rule_variant, stages + 1, max_vertices(cap)?)?;
            let mut nest = Nest::new(base);
            let root = ThetaString(vec![
                0;
                shift
                    .as_ref()
                    .map_or(0, |m| m.first().copied().unwrap_or(0))
                    + 1
            ]);
            let mut trace = Vec::new();
            for level in 1..=levels {
                let t = nest.push(&root, shift.as_deref())?;
                trace.push(level_trace(level, t)?);
            }
            let top = nest.top();
            let choices = branch.unwrap_or_else(|| vec![0; top.max_len()]);
            let b = build_g(&nest, &choices)?;
            let lat = nest.represented();
            let mut reductions = Vec::new();
            let mut ok = true;
            for k in lat.elements() {
                for m in lat.elements().filter(|&m| lat.leq(k, m)) {
                    let verdict = check_reduction(&nest, &b, k, m)?;
                    ok &= verdict == Reduction::Holds;
                    reductions.push(json!({ "k": k, "m": m, "result": to_value(&verdict)? }));
                }
            }
            let report =
                json!({ "levels": trace, "branch": to_value(&b)?, "reductions": reductions });
            emit_json(out.as_deref(), &report)?;
            eprintln!(
                "branch of length {}: reduction law {}",
                b.choices.len(),
                if ok { "holds" } else { "FAILS" }
            );
            Ok(if ok { Status::Ok } else { Status::Failed })
        }
        Command::RenderDot { graph, out } => {
            let (_, g) = io::load_graph(&graph)?;
            emit(out.as_deref(), &render_dot(&g, "theta"))?;
            Ok(Status::Ok)
        }
    }
}

/// The shortest strings of a tree's domain with their images, at most [`TRACE_STRINGS`] of them.
fn level_trace(level: usize, t: &inseg_core::tree::TreeMap) -> Result<Value> {
    let mut table = Vec::new();
    for p in 0..=t.max_len() {
        let strings: Vec<ThetaString> = StringIter::new(&t.domain_sizes()[..p])
            .take(TRACE_STRINGS + 1)
            .collect();
        if table.len() + strings.len() > TRACE_STRINGS {
            break;
        }
        for s in strings {
            let image = t.apply(&s)?;
            table.push(json!({ "sigma": s, "image": image }));
        }
    }
    let layer = t.layers().last().expect("shifted tree");
    Ok(json!({
        "level": level,
        "root": layer.root,
        "shift": layer.shift,
        "domain_sizes": t.domain_sizes(),
        "table": table,
    }))
}
