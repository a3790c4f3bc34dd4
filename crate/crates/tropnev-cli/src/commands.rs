//! One handler per subcommand. Handlers validate input, call the library,
//! and render the output; the caller maps the result onto exit codes.

use serde_json::json;

use tropnev::{
    casorati_roots_counting, cartan_characteristic, char_table, characteristic, classify_point,
    defect_relation_check, fmt_gap, growth_estimate, hyper_fmt_report, jensen_residual,
    log_diff_proximity, q_diff_proximity, q_smt_check, ray_slice, shift_proximity_bound,
    smt_check, ShiftFamily, ShiftStep, TropicalMatrix, TropicalNumber, TropicalPolynomial,
    TropicalRational,
};

use crate::config::{OutputFormat, RunConfig};
use crate::output::{render_csv, render_json, strip_quad_comments, Meta};
use crate::source;

/// Rendered output plus an optional failed-check reason; warnings are
/// non-fatal diagnostics for stderr.
#[derive(Debug, Default)]
pub struct Outcome {
    pub output: String,
    pub check: Option<String>,
    pub warnings: Vec<String>,
}

fn table(header: &str, rows: &[String]) -> String {
    let mut s = String::with_capacity(header.len() + rows.len() * 24);
    s.push_str(header);
    s.push('\n');
    for r in rows {
        s.push_str(r);
        s.push('\n');
    }
    s
}

fn point_header(dim: usize, tail: &str) -> String {
    let mut cols: Vec<String> = (1..=dim).map(|i| format!("x{i}")).collect();
    cols.push(tail.to_string());
    cols.join(",")
}

fn row_of(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn spread(xs: &[f64]) -> f64 {
    let lo = xs.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    hi - lo
}

fn load_points(at: &[String], dim: usize) -> Result<Vec<Vec<f64>>, String> {
    if at.is_empty() {
        return Err("pass at least one --at point".into());
    }
    at.iter()
        .map(|s| {
            let p = source::parse_vector(s, "--at")?;
            if p.len() != dim {
                return Err(format!(
                    "--at point has {} coordinates, the function has {dim} variable(s)",
                    p.len()
                ));
            }
            Ok(p)
        })
        .collect()
}

fn shift_vector(c: Option<&str>, dim: usize) -> Result<Vec<f64>, String> {
    let v = match c {
        Some(s) => source::parse_vector(s, "--c")?,
        None => vec![1.0; dim],
    };
    if v.len() != dim {
        return Err(format!(
            "--c has {} coordinates, the function has {dim} variable(s)",
            v.len()
        ));
    }
    Ok(v)
}

pub fn eval(cfg: &RunConfig, function: &str, at: &[String]) -> Result<Outcome, String> {
    let (f, warnings) = source::load_function(function)?;
    let points = load_points(at, f.dim())?;
    let mut values = Vec::with_capacity(points.len());
    for p in &points {
        values.push(f.eval(p).map_err(|e| e.to_string())?);
    }
    let meta = Meta::new("eval", cfg, None, f.dim());
    let output = match cfg.format {
        OutputFormat::Csv => {
            let rows: Vec<String> = points
                .iter()
                .zip(&values)
                .map(|(p, v)| format!("{},{v}", row_of(p)))
                .collect();
            render_csv(&meta, &table(&point_header(f.dim(), "value"), &rows))
        }
        OutputFormat::Json => render_json(&meta, json!({"points": points, "values": values})),
    };
    Ok(Outcome {
        output,
        check: None,
        warnings,
    })
}

pub fn classify(cfg: &RunConfig, function: &str, at: &[String]) -> Result<Outcome, String> {
    let (f, warnings) = source::load_function(function)?;
    let points = load_points(at, f.dim())?;
    let quad = cfg.quadrature(f.dim())?;
    let mut classes = Vec::with_capacity(points.len());
    for p in &points {
        classes.push(classify_point(&f, p, &quad, cfg.tol).map_err(|e| e.to_string())?);
    }
    let meta = Meta::new("classify", cfg, Some(&quad), f.dim());
    let output = match cfg.format {
        OutputFormat::Csv => {
            let rows: Vec<String> = points
                .iter()
                .zip(&classes)
                .map(|(p, c)| format!("{},{},{}", row_of(p), c.kind, c.multiplicity))
                .collect();
            render_csv(
                &meta,
                &table(&point_header(f.dim(), "kind,multiplicity"), &rows),
            )
        }
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = points
                .iter()
                .zip(&classes)
                .map(|(p, c)| {
                    json!({"point": p, "kind": c.kind.to_string(), "multiplicity": c.multiplicity})
                })
                .collect();
            render_json(&meta, json!({ "classifications": rows }))
        }
    };
    Ok(Outcome {
        output,
        check: None,
        warnings,
    })
}

pub fn slice(
    cfg: &RunConfig,
    function: &str,
    dir: Option<&str>,
    radius: Option<f64>,
) -> Result<Outcome, String> {
    let (f, warnings) = source::load_function(function)?;
    let mut dir = match dir {
        Some(s) => source::parse_vector(s, "--dir")?,
        None => vec![1.0; f.dim()],
    };
    if dir.len() != f.dim() {
        return Err(format!(
            "--dir has {} coordinates, the function has {} variable(s)",
            dir.len(),
            f.dim()
        ));
    }
    let norm = dir.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err("--dir must be nonzero".into());
    }
    for v in &mut dir {
        *v /= norm;
    }
    let radius = radius.unwrap_or(cfg.grid.max);
    if !radius.is_finite() || radius <= 0.0 {
        return Err(format!("--radius must be positive and finite, got {radius}"));
    }

    let s = ray_slice(&f, &dir, radius, cfg.tol);
    let mut meta = Meta::new("slice", cfg, None, f.dim());
    meta.push("direction", format!("{dir:?}"));
    meta.push("radius", radius);
    meta.push("value_at_0", s.value_at_0);
    meta.push("slopes", format!("{:?}", s.slopes));
    let kind_of = |jump: f64| if jump < 0.0 { "pole" } else { "root" };
    let output = match cfg.format {
        OutputFormat::Csv => {
            let rows: Vec<String> = s
                .breakpoints
                .iter()
                .map(|bp| format!("{},{},{}", bp.t, bp.jump, kind_of(bp.jump)))
                .collect();
            render_csv(&meta, &table("t,jump,kind", &rows))
        }
        OutputFormat::Json => {
            let bps: Vec<serde_json::Value> = s
                .breakpoints
                .iter()
                .map(|bp| json!({"t": bp.t, "jump": bp.jump, "kind": kind_of(bp.jump)}))
                .collect();
            render_json(
                &meta,
                json!({
                    "direction": dir,
                    "radius": radius,
                    "value_at_0": s.value_at_0,
                    "slopes": s.slopes,
                    "breakpoints": bps,
                }),
            )
        }
    };
    Ok(Outcome {
        output,
        check: None,
        warnings,
    })
}

pub fn charfun(cfg: &RunConfig, function: &str) -> Result<Outcome, String> {
    let (f, warnings) = source::load_function(function)?;
    let grid = cfg.grid.build();
    let quad = cfg.quadrature(f.dim())?;
    let t = char_table(&f, &grid, &quad).map_err(|e| e.to_string())?;
    let meta = Meta::new("charfun", cfg, Some(&quad), f.dim()).with_grid(cfg);
    let output = match cfg.format {
        OutputFormat::Csv => render_csv(&meta, &strip_quad_comments(&t.to_csv())),
        OutputFormat::Json => {
            let v: serde_json::Value =
                serde_json::from_str(&t.to_json()).expect("library JSON parses");
            render_json(&meta, v)
        }
    };
    Ok(Outcome {
        output,
        check: None,
        warnings,
    })
}

pub fn jensen(cfg: &RunConfig, function: &str) -> Result<Outcome, String> {
    let (f, warnings) = source::load_function(function)?;
    let grid = cfg.grid.build();
    let quad = cfg.quadrature(f.dim())?;
    let residuals: Vec<f64> = grid.iter().map(|&r| jensen_residual(&f, r, &quad)).collect();
    let max_abs = residuals.iter().fold(0.0f64, |a, r| a.max(r.abs()));
    let pass = max_abs <= cfg.tol;

    let mut meta = Meta::new("jensen", cfg, Some(&quad), f.dim()).with_grid(cfg);
    meta.push("max_abs_residual", max_abs);
    let output = match cfg.format {
        OutputFormat::Csv => {
            let rows: Vec<String> = grid
                .iter()
                .zip(&residuals)
                .map(|(r, res)| format!("{r},{res}"))
                .collect();
            render_csv(&meta, &table("r,residual", &rows))
        }
        OutputFormat::Json => render_json(
            &meta,
            json!({"r": grid, "residual": residuals, "max_abs_residual": max_abs, "pass": pass}),
        ),
    };
    Ok(Outcome {
        output,
        check: (!pass).then(|| {
            format!(
                "max |Jensen residual| {max_abs:e} exceeds the tolerance {:e}",
                cfg.tol
            )
        }),
        warnings,
    })
}

pub fn fmt(cfg: &RunConfig, function: &str, level: f64) -> Result<Outcome, String> {
    if !level.is_finite() {
        return Err(format!("--level must be finite, got {level}"));
    }
    let (f, warnings) = source::load_function(function)?;
    let grid = cfg.grid.build();
    let quad = cfg.quadrature(f.dim())?;
    let rep = fmt_gap(&f, level, &grid, &quad).map_err(|e| e.to_string())?;

    let floor = rep
        .pole_floor
        .map_or_else(|| "none".to_string(), |v| v.to_string());
    let mut meta = Meta::new("fmt", cfg, Some(&quad), f.dim()).with_grid(cfg);
    meta.push("level", level);
    meta.push("pole_floor", &floor);
    meta.push("above_floor", rep.above_floor);
    let output = match cfg.format {
        OutputFormat::Csv => {
            let rows: Vec<String> = grid
                .iter()
                .zip(&rep.gaps)
                .map(|(r, g)| format!("{r},{g}"))
                .collect();
            render_csv(&meta, &table("r,gap", &rows))
        }
        OutputFormat::Json => render_json(
            &meta,
            json!({
                "r": grid,
                "gap": rep.gaps,
                "pole_floor": rep.pole_floor,
                "above_floor": rep.above_floor,
            }),
        ),
    };
    Ok(Outcome {
        output,
        check: rep.above_floor.then(|| {
            format!(
                "shift level {level} is at or above the pole value floor {floor}; \
                 the bounded-gap premise fails"
            )
        }),
        warnings,
    })
}

pub fn ldl(
    cfg: &RunConfig,
    function: &str,
    c: Option<&str>,
    alpha: f64,
) -> Result<Outcome, String> {
    if !alpha.is_finite() || alpha <= 1.0 {
        return Err(format!("--alpha must exceed 1, got {alpha}"));
    }
    let (f, warnings) = source::load_function(function)?;
    let c = shift_vector(c, f.dim())?;
    if c.iter().all(|&v| v == 0.0) {
        return Err("--c must be nonzero".into());
    }
    let grid = cfg.grid.build();
    let quad = cfg.quadrature(f.dim())?;

    let mut rows = Vec::with_capacity(grid.len());
    let mut violation: Option<(f64, f64, f64)> = None;
    for &r in &grid {
        let m = log_diff_proximity(&f, &c, r, &quad).map_err(|e| e.to_string())?;
        let bound = shift_proximity_bound(&f, &c, alpha, r, &quad);
        if violation.is_none() && m > bound + cfg.tol {
            violation = Some((r, m, bound));
        }
        rows.push((r, m, bound));
    }
    let one_dim = f.dim() == 1;

    let mut meta = Meta::new("ldl", cfg, Some(&quad), f.dim()).with_grid(cfg);
    meta.push("c", format!("{c:?}"));
    meta.push("alpha", alpha);
    if !one_dim {
        meta.push("bound_check", "skipped (the closed-form bound is one-variable)");
    }
    let output = match cfg.format {
        OutputFormat::Csv => {
            let body: Vec<String> = rows
                .iter()
                .map(|(r, m, b)| format!("{r},{m},{b}"))
                .collect();
            render_csv(&meta, &table("r,m,bound", &body))
        }
        OutputFormat::Json => render_json(
            &meta,
            json!({
                "r": grid,
                "m": rows.iter().map(|t| t.1).collect::<Vec<_>>(),
                "bound": rows.iter().map(|t| t.2).collect::<Vec<_>>(),
            }),
        ),
    };
    Ok(Outcome {
        output,
        check: violation.filter(|_| one_dim).map(|(r, m, b)| {
            format!("shift proximity {m} exceeds its bound {b} at r={r}")
        }),
        warnings,
    })
}

pub fn qldl(cfg: &RunConfig, function: &str, scale: f64) -> Result<Outcome, String> {
    let (f, warnings) = source::load_function(function)?;
    let grid = cfg.grid.build();
    let quad = cfg.quadrature(f.dim())?;
    let mut rows = Vec::with_capacity(grid.len());
    for &r in &grid {
        let m = q_diff_proximity(&f, scale, r, &quad).map_err(|e| e.to_string())?;
        rows.push((r, m, characteristic(&f, r, &quad)));
    }
    let mut meta = Meta::new("qldl", cfg, Some(&quad), f.dim()).with_grid(cfg);
    meta.push("scale", scale);
    let output = match cfg.format {
        OutputFormat::Csv => {
            let body: Vec<String> = rows
                .iter()
                .map(|(r, m, t)| format!("{r},{m},{t}"))
                .collect();
            render_csv(&meta, &table("r,m,T", &body))
        }
        OutputFormat::Json => render_json(
            &meta,
            json!({
                "r": grid,
                "m": rows.iter().map(|t| t.1).collect::<Vec<_>>(),
                "T": rows.iter().map(|t| t.2).collect::<Vec<_>>(),
            }),
        ),
    };
    Ok(Outcome {
        output,
        check: None,
        warnings,
    })
}

pub fn cartan(cfg: &RunConfig, map: &str) -> Result<Outcome, String> {
    let f = source::load_map(map)?;
    let grid = cfg.grid.build();
    let quad = cfg.quadrature(f.dim())?;
    let values: Vec<f64> = grid
        .iter()
        .map(|&r| cartan_characteristic(&f, r, &quad))
        .collect();
    let mut meta = Meta::new("cartan", cfg, Some(&quad), f.dim()).with_grid(cfg);
    meta.push("target_dim", f.target_dim());
    let output = match cfg.format {
        OutputFormat::Csv => {
            let rows: Vec<String> = grid
                .iter()
                .zip(&values)
                .map(|(r, t)| format!("{r},{t}"))
                .collect();
            render_csv(&meta, &table("r,T", &rows))
        }
        OutputFormat::Json => render_json(&meta, json!({"r": grid, "T": values})),
    };
    Ok(Outcome {
        output,
        check: None,
        warnings: Vec::new(),
    })
}

pub fn hyperfmt(cfg: &RunConfig, map: &str, hyper: &[String]) -> Result<Outcome, String> {
    let f = source::load_map(map)?;
    let [h] = hyper else {
        return Err("hyperfmt needs exactly one --hyper".into());
    };
    let p = source::load_hyper(h)?;
    let grid = cfg.grid.build();
    let quad = cfg.quadrature(f.dim())?;
    let rep = hyper_fmt_report(&p, &f, &grid, &quad).map_err(|e| e.to_string())?;

    let residual_spread = spread(&rep.residual);
    let coeff_spread = p.max_coeff() - p.min_coeff();
    let mut meta = Meta::new("hyperfmt", cfg, Some(&quad), f.dim()).with_grid(cfg);
    meta.push("degree", p.degree());
    meta.push("coeff_spread", coeff_spread);
    meta.push("residual_spread", residual_spread);
    let output = match cfg.format {
        OutputFormat::Csv => render_csv(&meta, &strip_quad_comments(&rep.to_csv())),
        OutputFormat::Json => {
            let v: serde_json::Value =
                serde_json::from_str(&rep.to_json()).expect("library JSON parses");
            render_json(&meta, v)
        }
    };
    Ok(Outcome {
        output,
        check: (residual_spread > coeff_spread + cfg.tol).then(|| {
            format!(
                "residual spread {residual_spread} exceeds the coefficient spread \
                 {coeff_spread} plus tolerance"
            )
        }),
        warnings: Vec::new(),
    })
}

pub fn defect(cfg: &RunConfig, map: &str, hyper: &[String]) -> Result<Outcome, String> {
    let f = source::load_map(map)?;
    if hyper.is_empty() {
        return Err("defect needs at least one --hyper".into());
    }
    let grid = cfg.grid.build();
    let quad = cfg.quadrature(f.dim())?;

    if let [h] = hyper {
        let p = source::load_hyper(h)?;
        let v = tropnev::projective::defect(&p, &f, &grid, &quad).map_err(|e| e.to_string())?;
        let meta = Meta::new("defect", cfg, Some(&quad), f.dim()).with_grid(cfg);
        let output = match cfg.format {
            OutputFormat::Csv => render_csv(&meta, &table("defect", &[v.to_string()])),
            OutputFormat::Json => render_json(&meta, json!({ "defect": v })),
        };
        return Ok(Outcome {
            output,
            check: (!(-cfg.tol..=1.0 + cfg.tol).contains(&v))
                .then(|| format!("defect estimate {v} falls outside [0, 1]")),
            warnings: Vec::new(),
        });
    }

    let ps = hyper
        .iter()
        .map(|h| source::load_hyper(h))
        .collect::<Result<Vec<_>, _>>()?;
    let rep = defect_relation_check(&f, &ps, &grid, &quad).map_err(|e| e.to_string())?;
    let mut meta = Meta::new("defect", cfg, Some(&quad), f.dim()).with_grid(cfg);
    meta.push("sum_all", rep.sum_all);
    meta.push("sum_tail", rep.sum_tail);
    meta.push("within_total_bound", rep.within_total_bound);
    meta.push("within_tail_bound", rep.within_tail_bound);
    let output = match cfg.format {
        OutputFormat::Csv => render_csv(&meta, &strip_quad_comments(&rep.to_csv())),
        OutputFormat::Json => {
            let v: serde_json::Value =
                serde_json::from_str(&rep.to_json()).expect("library JSON parses");
            render_json(&meta, v)
        }
    };
    Ok(Outcome {
        output,
        check: (!(rep.within_total_bound && rep.within_tail_bound)).then(|| {
            format!(
                "defect sums break the degeneracy bounds (sum_all {}, sum_tail {}, \
                 lambda [{}, {}])",
                rep.sum_all, rep.sum_tail, rep.lambda.0, rep.lambda.1
            )
        }),
        warnings: Vec::new(),
    })
}

pub fn casorati(
    cfg: &RunConfig,
    functions: &[String],
    c: Option<&str>,
    scale: Option<f64>,
) -> Result<Outcome, String> {
    if functions.is_empty() {
        return Err("casorati needs entire base functions; repeat -f to build the family".into());
    }
    let mut warnings = Vec::new();
    let mut base: Vec<TropicalPolynomial> = Vec::with_capacity(functions.len());
    for src in functions {
        let (p, w) = source::load_entire(src)?;
        warnings.extend(w);
        base.push(p);
    }
    let dim = base[0].dim();
    let step = match (c, scale) {
        (Some(_), Some(_)) => return Err("pass either --c or --scale, not both".into()),
        (Some(s), None) => ShiftStep::Translate(source::parse_vector(s, "--c")?),
        (None, Some(q)) => ShiftStep::Scale(q),
        (None, None) => ShiftStep::Translate(vec![1.0; dim]),
    };
    let family = ShiftFamily::new(base, step).map_err(|e| e.to_string())?;
    let grid = cfg.grid.build();
    let quad = cfg.quadrature(dim)?;
    let mut values = Vec::with_capacity(grid.len());
    for &r in &grid {
        values.push(casorati_roots_counting(&family, r, &quad).map_err(|e| e.to_string())?);
    }

    let mut meta = Meta::new("casorati", cfg, Some(&quad), dim).with_grid(cfg);
    meta.push("order", family.order());
    meta.push(
        "step",
        match family.step() {
            ShiftStep::Translate(v) => format!("translate {v:?}"),
            ShiftStep::Scale(q) => format!("scale {q}"),
        },
    );
    let output = match cfg.format {
        OutputFormat::Csv => {
            let rows: Vec<String> = grid
                .iter()
                .zip(&values)
                .map(|(r, n)| format!("{r},{n}"))
                .collect();
            render_csv(&meta, &table("r,N", &rows))
        }
        OutputFormat::Json => render_json(&meta, json!({"r": grid, "N": values})),
    };
    Ok(Outcome {
        output,
        check: None,
        warnings,
    })
}

pub fn det(cfg: &RunConfig, matrix: &str) -> Result<Outcome, String> {
    let text = source::load_text(matrix)?;
    let rows: Vec<Vec<TropicalNumber>> =
        serde_json::from_str(text.trim()).map_err(|e| format!("matrix: {e}"))?;
    let m = TropicalMatrix::from_rows(&rows).map_err(|e| e.to_string())?;
    let d = m.trop_det().map_err(|e| e.to_string())?;
    let meta = Meta::new("det", cfg, None, 1);
    let output = match cfg.format {
        OutputFormat::Csv => render_csv(&meta, &format!("{d}\n")),
        OutputFormat::Json => render_json(&meta, json!({ "det": d })),
    };
    Ok(Outcome {
        output,
        check: None,
        warnings: Vec::new(),
    })
}

fn smt_outcome(
    cfg: &RunConfig,
    tool: &'static str,
    rep: tropnev::SmtReport,
    dim: usize,
    quad: &tropnev::SphereQuadrature,
) -> Outcome {
    let mut meta = Meta::new(tool, cfg, Some(quad), dim).with_grid(cfg);
    meta.push("q", rep.q);
    meta.push("basis_size", rep.basis_size);
    meta.push("lambda", format!("[{}, {}]", rep.lambda.0, rep.lambda.1));
    meta.push("vacuous", rep.vacuous);

    let mut worst: Option<(f64, f64)> = None;
    for row in &rep.rows {
        if worst.is_none_or(|(_, s)| row.slack < s) {
            worst = Some((row.r, row.slack));
        }
    }
    let check = match worst {
        Some((r, s)) if !rep.vacuous && s < -cfg.tol => Some(format!(
            "inequality slack {s} at r={r} dips below -tol; the observational check fails"
        )),
        _ => None,
    };

    let output = match cfg.format {
        OutputFormat::Csv => render_csv(&meta, &strip_quad_comments(&rep.to_csv())),
        OutputFormat::Json => {
            let v: serde_json::Value =
                serde_json::from_str(&rep.to_json()).expect("library JSON parses");
            render_json(&meta, v)
        }
    };
    Outcome {
        output,
        check,
        warnings: Vec::new(),
    }
}

pub fn smt(
    cfg: &RunConfig,
    map: &str,
    hyper: &[String],
    c: Option<&str>,
) -> Result<Outcome, String> {
    let f = source::load_map(map)?;
    let ps = hyper
        .iter()
        .map(|h| source::load_hyper(h))
        .collect::<Result<Vec<_>, _>>()?;
    let c = shift_vector(c, f.dim())?;
    let grid = cfg.grid.build();
    let quad = cfg.quadrature(f.dim())?;
    let rep = smt_check(&f, &ps, &c, &grid, &quad).map_err(|e| e.to_string())?;
    Ok(smt_outcome(cfg, "smt", rep, f.dim(), &quad))
}

pub fn qsmt(cfg: &RunConfig, map: &str, hyper: &[String], scale: f64) -> Result<Outcome, String> {
    let f = source::load_map(map)?;
    let ps = hyper
        .iter()
        .map(|h| source::load_hyper(h))
        .collect::<Result<Vec<_>, _>>()?;
    let grid = cfg.grid.build();
    let quad = cfg.quadrature(f.dim())?;
    let rep = q_smt_check(&f, &ps, scale, &grid, &quad).map_err(|e| e.to_string())?;
    Ok(smt_outcome(cfg, "qsmt", rep, f.dim(), &quad))
}

pub fn growth(cfg: &RunConfig, function: &str) -> Result<Outcome, String> {
    let (f, warnings) = source::load_function(function)?;
    let grid = cfg.grid.build();
    let quad = cfg.quadrature(f.dim())?;
    let est = growth_estimate(&f, &grid, &quad).map_err(|e| e.to_string())?;
    let meta = Meta::new("growth", cfg, Some(&quad), f.dim()).with_grid(cfg);
    let output = match cfg.format {
        OutputFormat::Csv => render_csv(
            &meta,
            &table(
                "rho,rho2,subnormal",
                &[format!("{},{},{}", est.rho, est.rho2, est.subnormal)],
            ),
        ),
        OutputFormat::Json => render_json(
            &meta,
            serde_json::to_value(est).expect("estimate serializes"),
        ),
    };
    Ok(Outcome {
        output,
        check: None,
        warnings,
    })
}

/// Evaluates `f` only through its printed form; used by the round-trip
/// tests to pin that printing and parsing are inverse.
pub fn reparse(f: &TropicalRational) -> Result<TropicalRational, String> {
    let (g, warnings) = crate::expr::parse_rational(&f.to_string()).map_err(|e| e.to_string())?;
    if !warnings.is_empty() {
        return Err(format!("unexpected warnings: {warnings:?}"));
    }
    Ok(g)
}
