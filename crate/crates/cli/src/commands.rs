use std::fmt::Write as _;

use moncoh::structure::is_extremal;
use moncoh::{
    delta_alpha, stanley_reisner_complex, t_complex, verify_ideal, BettiTable, Engine, Field,
    GradedModule, IdealSampler, Monomial, MonomialIdeal, MultiDegree, SimplicialComplex, VarSet,
    VerifyOptions, VerifyReport,
};
use serde_json::{json, Value};

use crate::args::{Command, ModuleArg, Which};
use crate::Failure;

/// What a command produced: a text rendering and the JSON `results` value.
pub struct Rendered {
    pub text: String,
    pub results: Value,
    /// Set when `verify` found mismatches.
    pub mismatch: bool,
}

impl Rendered {
    fn ok(text: String, results: Value) -> Self {
        Rendered {
            text,
            results,
            mismatch: false,
        }
    }
}

pub struct Context {
    pub names: Vec<String>,
    pub ideal: MonomialIdeal,
}

impl Context {
    fn set(&self, s: VarSet) -> String {
        Monomial::from_varset(self.names.len(), s).render(&self.names)
    }

    fn set_names(&self, s: VarSet) -> Vec<String> {
        s.iter().map(|j| self.names[j].clone()).collect()
    }

    fn gens(&self, ideal: &MonomialIdeal) -> Vec<String> {
        ideal.gens().iter().map(|g| g.render(&self.names)).collect()
    }

    fn degree(&self, text: &str) -> Result<MultiDegree, Failure> {
        let coords = text
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| {
                Failure::Usage(format!(
                    "--alpha: expected comma-separated integers, got `{text}`"
                ))
            })?;
        if coords.len() != self.names.len() {
            return Err(Failure::Usage(format!(
                "--alpha has {} entries but there are {} variables",
                coords.len(),
                self.names.len()
            )));
        }
        Ok(MultiDegree::new(coords))
    }

    fn var(&self, name: &str) -> Result<usize, Failure> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Failure::Usage(format!("unknown variable `{name}`")))
    }
}

fn facets_json(ctx: &Context, c: &SimplicialComplex) -> Value {
    if c.is_void() {
        return Value::Null;
    }
    Value::Array(
        c.facets()
            .iter()
            .map(|f| json!(ctx.set_names(*f)))
            .collect(),
    )
}

fn facets_text(c: &SimplicialComplex, render: impl Fn(VarSet) -> String) -> String {
    if c.is_void() {
        return "void".to_string();
    }
    let parts: Vec<String> = c
        .facets()
        .iter()
        .map(|f| {
            if f.is_empty() {
                "∅".to_string()
            } else {
                render(*f)
            }
        })
        .collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn execute<F: Field>(
    engine: &Engine<F>,
    command: &Command,
    ctx: &Context,
) -> Result<Rendered, Failure> {
    let ideal = &ctx.ideal;
    match command {
        Command::Dual { .. } => {
            let dual = ideal.alexander_dual()?;
            let gens = ctx.gens(&dual);
            Ok(Rendered::ok(
                gens.join(" "),
                json!({ "ideal": ctx.gens(ideal), "dual": gens }),
            ))
        }
        Command::Complex { alpha, nerve, .. } => complex(ctx, alpha.as_deref(), *nerve),
        Command::Betti { of, .. } => {
            let target = match of {
                Which::Ideal => ideal.clone(),
                Which::Dual => ideal.alexander_dual()?,
            };
            let table = engine.betti_table(&target)?;
            Ok(betti(ctx, &target, &table))
        }
        Command::Lc {
            index,
            alpha,
            via_t,
            ..
        } => {
            let alpha = ctx.degree(alpha)?;
            let piece = if *via_t {
                engine.lc_piece_via_t(ideal, *index, &alpha)?
            } else {
                engine.lc_piece(ideal, *index, &alpha)?
            };
            let complex = if *via_t {
                t_complex(ideal, alpha.negative_support())?
            } else {
                stanley_reisner_complex(ideal)?.full_subcomplex(alpha.negative_support())
            };
            let cochains = piece.basis.as_ref().map_or(0, |b| b.faces.len());
            let text = format!(
                "H^{index}_B(R)_{alpha} = {}\ncomplex {}\ncohomology degree {}, {cochains} cochains",
                piece.dim,
                if *via_t {
                    facets_text(&complex, |f| {
                        let v: Vec<String> = f.iter().map(|g| (g + 1).to_string()).collect();
                        format!("[{}]", v.join(","))
                    })
                } else {
                    facets_text(&complex, |f| ctx.set(f))
                },
                index - 2
            );
            let facets = if *via_t {
                if complex.is_void() {
                    Value::Null
                } else {
                    json!(complex
                        .facets()
                        .iter()
                        .map(|f| f.iter().collect::<Vec<_>>())
                        .collect::<Vec<_>>())
                }
            } else {
                facets_json(ctx, &complex)
            };
            Ok(Rendered::ok(
                text,
                json!({
                    "i": index,
                    "alpha": alpha.coords(),
                    "dim": piece.dim,
                    "via_t": via_t,
                    "facets": facets,
                    "cohomology_degree": index - 2,
                    "cochains": cochains,
                }),
            ))
        }
        Command::Ext { index, alpha, .. } => {
            let alpha = ctx.degree(alpha)?;
            let (piece, complex) = if ideal.is_squarefree() {
                let piece = engine.ext_piece(ideal, *index, &alpha)?;
                let complex = if alpha.is_at_least(-1) {
                    stanley_reisner_complex(ideal)?.full_subcomplex(alpha.negative_support())
                } else {
                    SimplicialComplex::void(ideal.nvars())
                };
                (piece, complex)
            } else {
                (
                    engine.ext_piece_general(ideal, *index, &alpha)?,
                    delta_alpha(ideal, &alpha)?,
                )
            };
            let cochains = piece.basis.as_ref().map_or(0, |b| b.faces.len());
            Ok(Rendered::ok(
                format!(
                    "Ext^{index}(R/B,R)_{alpha} = {}\ncomplex {}\ncohomology degree {}, {cochains} cochains",
                    piece.dim,
                    facets_text(&complex, |f| ctx.set(f)),
                    index - 2
                ),
                json!({
                    "i": index,
                    "alpha": alpha.coords(),
                    "dim": piece.dim,
                    "facets": facets_json(ctx, &complex),
                    "cohomology_degree": index - 2,
                    "cochains": cochains,
                }),
            ))
        }
        Command::Mult {
            index, alpha, var, ..
        } => {
            let alpha = ctx.degree(alpha)?;
            let l = ctx.var(var)?;
            let m = engine.multiplication_map(ideal, *index, &alpha, l)?;
            let entries = m.render(engine.field());
            let invertible = moncoh::matrix::is_invertible(engine.field(), &m);
            let mut text = format!(
                "{var}: H^{index}_B(R)_{alpha} -> H^{index}_B(R)_{}  ({} x {}){}\n",
                alpha.bumped(l),
                m.rows(),
                m.cols(),
                if invertible { ", invertible" } else { "" }
            );
            for row in &entries {
                writeln!(text, "  [{}]", row.join(" ")).unwrap();
            }
            Ok(Rendered::ok(
                text.trim_end().to_string(),
                json!({
                    "i": index,
                    "alpha": alpha.coords(),
                    "var": var,
                    "target": alpha.bumped(l).coords(),
                    "rows": m.rows(),
                    "cols": m.cols(),
                    "matrix": entries,
                    "invertible": invertible,
                }),
            ))
        }
        Command::Filtration { index, .. } => {
            let report = engine.filtration_quotients(ideal, *index)?;
            let mut text = format!("filtration of Ext^{index}(R/B,R)\n");
            let mut layers = Vec::new();
            for (l, layer) in report.layers.iter().enumerate() {
                if layer.is_empty() {
                    continue;
                }
                let parts: Vec<String> = layer
                    .iter()
                    .map(|(a, m)| {
                        let prime = ctx.set_names(*a).join(",");
                        let shift = MultiDegree::indicator(ctx.names.len(), *a);
                        let base = format!("R/({prime}){shift}");
                        if *m == 1 {
                            base
                        } else {
                            format!("{base}^{m}")
                        }
                    })
                    .collect();
                writeln!(text, "  M_{l}/M_{}: {}", l as i64 - 1, parts.join(" + ")).unwrap();
                layers.push(json!({
                    "l": l,
                    "summands": layer
                        .iter()
                        .map(|(a, m)| json!({ "support": ctx.set_names(*a), "multiplicity": m }))
                        .collect::<Vec<_>>(),
                }));
            }
            if layers.is_empty() {
                text.push_str("  zero module\n");
            }
            Ok(Rendered::ok(
                text.trim_end().to_string(),
                json!({ "i": index, "layers": layers }),
            ))
        }
        Command::Ass { index, minimal, .. } => {
            let primes = if *minimal {
                engine.minimal_associated_primes(ideal, *index)?
            } else {
                engine.associated_primes(ideal, *index)?
            };
            let support = engine.betti_support(ideal, *index)?;
            Ok(Rendered::ok(
                primes.render(&ctx.names),
                json!({
                    "i": index,
                    "minimal": minimal,
                    "primes": primes.iter().map(|p| ctx.set_names(p)).collect::<Vec<_>>(),
                    "betti_support": support.iter().map(|p| ctx.set_names(*p)).collect::<Vec<_>>(),
                }),
            ))
        }
        Command::Hilbert {
            index,
            bounds,
            closed_form,
            module,
            ..
        } => match bounds {
            Some(b) if !closed_form => hilbert_box(engine, ctx, *index, b, *module),
            _ => {
                let terms = engine.hilbert_series_closed_form(ideal, *index)?;
                let mut text = format!("Hilbert series of Ext^{index}(R/B,R)\n");
                for t in &terms {
                    let denom: Vec<String> = t
                        .free
                        .iter()
                        .map(|j| format!("(1-t_{})", ctx.names[j]))
                        .collect();
                    writeln!(
                        text,
                        "  {} t^-{} / {}",
                        t.multiplicity,
                        ctx.set(t.shift),
                        if denom.is_empty() {
                            "1".to_string()
                        } else {
                            denom.join("")
                        }
                    )
                    .unwrap();
                }
                if terms.is_empty() {
                    text.push_str("  0\n");
                }
                Ok(Rendered::ok(
                    text.trim_end().to_string(),
                    json!({
                        "i": index,
                        "terms": terms
                            .iter()
                            .map(|t| json!({
                                "shift": ctx.set_names(t.shift),
                                "free": ctx.set_names(t.free),
                                "multiplicity": t.multiplicity,
                            }))
                            .collect::<Vec<_>>(),
                    }),
                ))
            }
        },
        Command::Check { .. } => check(engine, ctx),
        Command::Verify {
            dmax, seed, random, ..
        } => verify(engine, ctx, *dmax, *seed, *random),
    }
}

fn complex(ctx: &Context, alpha: Option<&str>, nerve: bool) -> Result<Rendered, Failure> {
    let ideal = &ctx.ideal;
    let Some(alpha) = alpha else {
        let delta = stanley_reisner_complex(ideal)?;
        return Ok(complex_doc(ctx, "delta", &delta));
    };
    let alpha = ctx.degree(alpha)?;
    if nerve {
        let t = t_complex(ideal, alpha.negative_support())?;
        let facets = if t.is_void() {
            Value::Null
        } else {
            json!(t
                .facets()
                .iter()
                .map(|f| f.iter().map(|g| g + 1).collect::<Vec<_>>())
                .collect::<Vec<_>>())
        };
        let text = format!(
            "T_{{{}}} on generators 1..{}: {}",
            ctx.set_names(alpha.negative_support()).join(","),
            ideal.num_gens(),
            facets_text(&t, |f| {
                let v: Vec<String> = f.iter().map(|g| (g + 1).to_string()).collect();
                format!("[{}]", v.join(","))
            })
        );
        return Ok(Rendered::ok(
            text,
            json!({ "kind": "nerve", "facets": facets, "dimension": t.dimension() }),
        ));
    }
    let c = delta_alpha(ideal, &alpha)?;
    Ok(complex_doc(ctx, "delta_alpha", &c))
}

fn complex_doc(ctx: &Context, kind: &str, c: &SimplicialComplex) -> Rendered {
    let text = format!(
        "facets {}\nf-vector {:?}",
        facets_text(c, |f| ctx.set(f)),
        c.f_vector()
    );
    Rendered::ok(
        text,
        json!({
            "kind": kind,
            "facets": facets_json(ctx, c),
            "dimension": c.dimension(),
            "f_vector": c.f_vector(),
        }),
    )
}

fn betti(ctx: &Context, target: &MonomialIdeal, table: &BettiTable) -> Rendered {
    let diagram = moncoh::BettiDiagram::from_table(table.clone());
    let totals = diagram.totals();
    let max_col = totals.keys().map(|(_, c)| *c).max().unwrap_or(0);
    let mut text = format!("betti diagram of ({})\n", ctx.gens(target).join(", "));
    let header: Vec<String> = (0..=max_col).map(|c| format!("{c:>4}")).collect();
    writeln!(text, "     {}", header.join("")).unwrap();
    let rows: Vec<usize> = {
        let mut r: Vec<usize> = totals.keys().map(|(r, _)| *r).collect();
        r.dedup();
        r
    };
    for row in &rows {
        let cells: Vec<String> = (0..=max_col)
            .map(|c| match totals.get(&(*row, c)) {
                Some(v) => format!("{v:>4}"),
                None => format!("{:>4}", "."),
            })
            .collect();
        writeln!(text, "{row:>3}: {}", cells.join("")).unwrap();
    }
    let mut entries = Vec::new();
    for ((i, a), b) in table.nonzero() {
        writeln!(text, "  beta_{{{i},{}}} = {b}", ctx.set(a)).unwrap();
        entries.push(json!({ "i": i, "support": ctx.set_names(a), "value": b }));
    }
    let cells: Vec<Value> = totals
        .iter()
        .map(|((row, col), total)| json!({ "row": row, "col": col, "total": total }))
        .collect();
    Rendered::ok(
        text.trim_end().to_string(),
        json!({ "ideal": ctx.gens(target), "entries": entries, "diagram": cells }),
    )
}

fn hilbert_box<F: Field>(
    engine: &Engine<F>,
    ctx: &Context,
    index: i64,
    bounds: &str,
    module: ModuleArg,
) -> Result<Rendered, Failure> {
    let (lo, hi) = bounds
        .split_once("..")
        .and_then(|(a, b)| Some((a.trim().parse::<i64>().ok()?, b.trim().parse::<i64>().ok()?)))
        .ok_or_else(|| Failure::Usage(format!("--box: expected `lo..hi`, got `{bounds}`")))?;
    let n = ctx.names.len();
    let module = match module {
        ModuleArg::Ext => GradedModule::Ext,
        ModuleArg::Lc => GradedModule::LocalCohomology,
    };
    let values = engine.hilbert_function_box(
        &ctx.ideal,
        index,
        &MultiDegree::new(vec![lo; n]),
        &MultiDegree::new(vec![hi; n]),
        module,
    )?;
    let name = match module {
        GradedModule::Ext => format!("Ext^{index}(R/B,R)"),
        GradedModule::LocalCohomology => format!("H^{index}_B(R)"),
    };
    let mut text = format!("dimensions of {name} on [{lo},{hi}]^{n}, nonzero only\n");
    let mut nonzero = Vec::new();
    for (beta, v) in &values {
        if *v > 0 {
            writeln!(text, "  {beta} {v}").unwrap();
            nonzero.push(json!({ "degree": beta.coords(), "dim": v }));
        }
    }
    Ok(Rendered::ok(
        text.trim_end().to_string(),
        json!({
            "i": index,
            "module": if module == GradedModule::Ext { "ext" } else { "lc" },
            "lo": lo,
            "hi": hi,
            "points": values.len(),
            "total": values.iter().map(|(_, v)| v).sum::<usize>(),
            "nonzero": nonzero,
        }),
    ))
}

fn check<F: Field>(engine: &Engine<F>, ctx: &Context) -> Result<Rendered, Failure> {
    let report = engine.check_betti_inequality(&ctx.ideal)?;
    let dual_table = engine.betti_table(&ctx.ideal.alexander_dual()?)?;
    let mut text = String::new();
    let violations: Vec<_> = report.violations().collect();
    writeln!(text, "{} violations", violations.len()).unwrap();
    for r in &violations {
        writeln!(
            text,
            "  i={} alpha={}: beta={} bound={}",
            r.index,
            ctx.set(r.support),
            r.lhs,
            r.rhs
        )
        .unwrap();
    }
    let mut pairs = Vec::new();
    writeln!(text, "extremal Betti numbers of the dual:").unwrap();
    for ((k, a), b) in dual_table.nonzero() {
        if !is_extremal(&dual_table, k, a) {
            continue;
        }
        let i = a.len() as i64 - k as i64 - 1;
        let row = report
            .rows
            .iter()
            .find(|r| r.index as i64 == i && r.support == a);
        let (lhs, extremal) = row.map_or((0, false), |r| (r.lhs, r.extremal));
        writeln!(
            text,
            "  beta_{{{k},{}}}(dual) = {b}  ->  beta_{{{i},{}}} = {lhs}{}",
            ctx.set(a),
            ctx.set(a),
            if extremal { " (extremal)" } else { "" }
        )
        .unwrap();
        pairs.push(json!({
            "dual_index": k,
            "index": i,
            "support": ctx.set_names(a),
            "dual_value": b,
            "value": lhs,
            "extremal": extremal,
        }));
    }
    let rows: Vec<Value> = report
        .rows
        .iter()
        .filter(|r| r.lhs > 0 || r.rhs > 0)
        .map(|r| {
            json!({
                "i": r.index,
                "support": ctx.set_names(r.support),
                "beta": r.lhs,
                "bound": r.rhs,
                "violation": r.violation,
            })
        })
        .collect();
    Ok(Rendered::ok(
        text.trim_end().to_string(),
        json!({ "violations": violations.len(), "extremal_pairs": pairs, "rows": rows }),
    ))
}

fn report_json(ctx: &Context, report: &VerifyReport) -> Value {
    let names = moncoh::default_names(report.ideal.nvars());
    let gens: Vec<String> = if report.ideal.nvars() == ctx.names.len() && report.ideal == ctx.ideal
    {
        ctx.gens(&report.ideal)
    } else {
        report
            .ideal
            .gens()
            .iter()
            .map(|g| g.render(&names))
            .collect()
    };
    json!({
        "ideal": gens,
        "nvars": report.ideal.nvars(),
        "passed": report.passed(),
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "cases": c.cases,
            "mismatches": c.mismatches,
            "samples": c.samples,
            "skipped": c.skipped,
        })).collect::<Vec<_>>(),
    })
}

fn verify<F: Field>(
    engine: &Engine<F>,
    ctx: &Context,
    d_max: u32,
    seed: u64,
    random: Option<usize>,
) -> Result<Rendered, Failure> {
    let opts = VerifyOptions {
        d_max,
        seed,
        ..VerifyOptions::default()
    };
    let mut reports = vec![verify_ideal(engine, &ctx.ideal, &opts)?];
    if let Some(count) = random {
        let mut sampler = IdealSampler::new(seed, 5, 5);
        for ideal in sampler.ideals(count) {
            reports.push(verify_ideal(engine, &ideal, &opts)?);
        }
    }
    let mut text = String::new();
    for (k, report) in reports.iter().enumerate() {
        let label = if k == 0 {
            format!("({})", ctx.gens(&report.ideal).join(", "))
        } else {
            format!("random #{k} {:?}", report.ideal)
        };
        writeln!(
            text,
            "{label}: {}",
            if report.passed() { "ok" } else { "MISMATCH" }
        )
        .unwrap();
        for c in &report.checks {
            match &c.skipped {
                Some(reason) => writeln!(text, "  {:<18} skipped ({reason})", c.name).unwrap(),
                None => writeln!(
                    text,
                    "  {:<18} {} cases, {} mismatches",
                    c.name, c.cases, c.mismatches
                )
                .unwrap(),
            }
            for s in &c.samples {
                writeln!(text, "    {s}").unwrap();
            }
        }
    }
    let passed = reports.iter().all(VerifyReport::passed);
    Ok(Rendered {
        text: text.trim_end().to_string(),
        results: json!({
            "passed": passed,
            "d_max": d_max,
            "seed": seed,
            "reports": reports.iter().map(|r| report_json(ctx, r)).collect::<Vec<_>>(),
        }),
        mismatch: !passed,
    })
}
