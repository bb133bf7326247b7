use std::io::Write;
use std::path::Path;

use serde::Serialize;

use super::{enumeration_cap, Cli, CliError, Command, Format, GroupArgs, RunConfig};
use crate::context::{compute_spectrum, Caps, ReflectionGroup, SpectrumRequest};
use crate::export::{matrix_csv, to_json, MatrixDocument, SpectrumDocument, SCHEMA_VERSION};
use crate::group::{Group, GroupParams};
use crate::partition::{
    character_dimension, codim_spectrum_entries, codim_spectrum_combinatorial, poincare_star_roots,
    xi_from_roots, PartitionTuple,
};
use crate::reflection::{all_reflections_order_two, DegreeData};
use crate::spectra::{MatrixKind, Method, Spectrum};
use crate::verify::{Harness, Suite};

type CmdResult = Result<(), CliError>;

fn emit(output: Option<&Path>, stdout: &mut dyn Write, data: &str) -> CmdResult {
    match output {
        Some(path) => std::fs::write(path, data)?,
        None => stdout.write_all(data.as_bytes())?,
    }
    Ok(())
}

fn params(g: GroupArgs) -> Result<GroupParams, CliError> {
    GroupParams::new(g.r, g.p, g.n).map_err(|e| CliError::Usage(e.to_string()))
}

fn reject_format(format: Format, allowed: &[Format], command: &str) -> CmdResult {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "{command} does not support --format {}",
            format!("{format:?}").to_lowercase()
        )))
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub(super) fn dispatch(cli: Cli, stdout: &mut dyn Write) -> CmdResult {
    let caps = Caps {
        enumeration: enumeration_cap()?,
        matrix: cli.max_matrix,
        tuples: cli.max_tuples,
    };
    let output = cli.output.as_deref();
    let data = match cli.command {
        Command::Group {
            group,
            elements,
            format,
        } => group_summary(params(group)?, caps, elements, format)?,
        Command::Classes { group, format } => classes(params(group)?, caps, format)?,
        Command::Reflections { group, format } => reflections(params(group)?, caps, format)?,
        Command::Lengths { group, format } => lengths(params(group)?, caps, format)?,
        Command::Matrix {
            group,
            kind,
            connection_set,
            format,
        } => {
            let cfg = RunConfig {
                params: params(group)?,
                kind: kind.into(),
                method: Method::Numeric,
                connection: connection_set.into(),
                tolerance: crate::spectra::DEFAULT_TOLERANCE,
                caps,
                format,
                output: cli.output.clone(),
            };
            matrix(&cfg)?
        }
        Command::Spectrum {
            group,
            kind,
            method,
            connection_set,
            tolerance,
            format,
        } => {
            let cfg = RunConfig {
                params: params(group)?,
                kind: kind.into(),
                method: method.into(),
                connection: connection_set.into(),
                tolerance,
                caps,
                format,
                output: cli.output.clone(),
            };
            render_spectrum(&cfg, &run_spectrum_command(&cfg)?)?
        }
        Command::Poincare { r, tuple, format } => poincare(r, &tuple, format)?,
        Command::CodimSpectrum {
            r,
            n,
            entries,
            format,
        } => codim_spectrum(r, n, entries, caps, format)?,
        Command::Verify {
            suite,
            format,
            timings,
            quiet,
        } => {
            let suite: Suite = suite.parse().map_err(|e: crate::Error| CliError::Usage(e.to_string()))?;
            reject_format(format, &[Format::Text, Format::Json], "verify")?;
            let report = run_verify_command(suite, !quiet);
            let text = match format {
                Format::Json => to_json(&report),
                _ => report.render(timings),
            };
            emit(output, stdout, &text)?;
            let failed = report.failures().count();
            return if failed == 0 { Ok(()) } else { Err(CliError::Failed(failed)) };
        }
    };
    emit(output, stdout, &data)
}

/// Dispatches a spectrum request to its route. Kind/method mismatches are
/// usage errors.
pub fn run_spectrum_command(cfg: &RunConfig) -> Result<Spectrum, CliError> {
    let req = SpectrumRequest {
        kind: cfg.kind,
        method: cfg.method,
        connection: cfg.connection,
        tolerance: cfg.tolerance,
        caps: cfg.caps,
    };
    req.validate(cfg.params).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(compute_spectrum(cfg.params, &req)?)
}

pub fn run_verify_command(suite: Suite, progress: bool) -> crate::verify::VerificationReport {
    Harness::new(progress).run(suite)
}

fn render_spectrum(cfg: &RunConfig, s: &Spectrum) -> Result<String, CliError> {
    reject_format(cfg.format, &[Format::Text, Format::Json], "spectrum")?;
    if cfg.format == Format::Json {
        return Ok(to_json(&SpectrumDocument::new(cfg.params, cfg.kind, s)));
    }
    let graph = match cfg.kind {
        MatrixKind::Codimension => String::new(),
        _ => format!(" of Γ(W,{})", if cfg.connection == crate::Connection::Standard { "S" } else { "T" }),
    };
    let mut out = format!(
        "{} {} spectrum{graph} via {} (max residual {:.1e})\n",
        cfg.params, cfg.kind, s.method, s.max_residual
    );
    if !s.is_integral() {
        out.push_str("non-integral; clustered raw eigenvalues:\n");
    }
    out.push_str(&format!("{s}\n"));
    Ok(out)
}

fn matrix(cfg: &RunConfig) -> Result<String, CliError> {
    reject_format(cfg.format, &[Format::Csv, Format::Json], "matrix")?;
    SpectrumRequest {
        connection: cfg.connection,
        ..SpectrumRequest::new(cfg.kind, Method::Numeric)
    }
    .validate(cfg.params)
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let rg = ReflectionGroup::with_cap(cfg.params, cfg.caps.enumeration)?;
    let m = rg.matrix(cfg.kind, cfg.connection, cfg.caps.matrix)?;
    Ok(match cfg.format {
        Format::Json => to_json(&MatrixDocument::new(&rg.group, &m)),
        _ => matrix_csv(&m),
    })
}

#[derive(Serialize)]
struct GroupSummary {
    schema: u32,
    params: GroupParams,
    order: usize,
    degrees: Vec<u64>,
    exponents: Vec<u64>,
    reflections: usize,
    reflections_all_order_two: bool,
    conjugacy_classes: usize,
    rational_classes: usize,
    real: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<String>>,
}

fn group_summary(params: GroupParams, caps: Caps, elements: bool, format: Format) -> Result<String, CliError> {
    reject_format(format, &[Format::Text, Format::Json], "group")?;
    let rg = ReflectionGroup::with_cap(params, caps.enumeration)?;
    let degrees = DegreeData::new(params)?;
    let summary = GroupSummary {
        schema: SCHEMA_VERSION,
        params,
        order: rg.order(),
        exponents: degrees.exponents(),
        degrees: degrees.degrees,
        reflections: rg.reflections.len(),
        reflections_all_order_two: all_reflections_order_two(&rg.group, &rg.reflections),
        conjugacy_classes: rg.classes.len(),
        rational_classes: rg.classes.rational_classes(&rg.group).len(),
        real: params.is_real(),
        elements: elements.then(|| rg.group.elements().iter().map(ToString::to_string).collect()),
    };
    if format == Format::Json {
        return Ok(to_json(&summary));
    }
    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    let mut out = format!(
        "{params}\norder: {}\ndegrees: {}\nexponents: {}\nreflections: {}\n\
         all reflections of order two: {}\nconjugacy classes: {}\nrational classes: {}\nreal: {}\n",
        summary.order,
        join(&summary.degrees),
        join(&summary.exponents),
        summary.reflections,
        summary.reflections_all_order_two,
        summary.conjugacy_classes,
        summary.rational_classes,
        summary.real
    );
    if let Some(elements) = &summary.elements {
        out.push_str("elements:\n");
        for (i, e) in elements.iter().enumerate() {
            out.push_str(&format!("{i:>6}  {e}\n"));
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct ClassRow {
    class: usize,
    representative: String,
    size: usize,
    element_order: u64,
    cycle_type: String,
    rational_class: usize,
}

fn classes(params: GroupParams, caps: Caps, format: Format) -> Result<String, CliError> {
    let g = Group::with_cap(params, caps.enumeration)?;
    let classes = g.conjugacy_classes();
    let rational = classes.rational_classes(&g);
    let rows: Vec<ClassRow> = (0..classes.len())
        .map(|c| {
            let rep = g.element(classes.representative(c));
            ClassRow {
                class: c,
                representative: rep.to_string(),
                size: classes.size(c),
                element_order: rep.order(),
                cycle_type: rep.cycle_type().to_string(),
                rational_class: rational.rational_of(c),
            }
        })
        .collect();
    Ok(match format {
        Format::Json => to_json(&serde_json::json!({
            "schema": SCHEMA_VERSION,
            "params": params,
            "classes": rows,
        })),
        Format::Csv => {
            let mut out = String::from("class,representative,size,element_order,cycle_type,rational_class\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.class,
                    csv_field(&r.representative),
                    r.size,
                    r.element_order,
                    csv_field(&r.cycle_type),
                    r.rational_class
                ));
            }
            out
        }
        Format::Text => {
            let width = rows.iter().map(|r| r.representative.len()).max().unwrap_or(0).max(14);
            let mut out = format!(
                "{params}: {} classes, {} rational classes\n{:>5}  {:<width$}  {:>6}  {:>5}  {:>8}  cycle type\n",
                rows.len(),
                rational.len(),
                "class",
                "representative",
                "size",
                "order",
                "rational"
            );
            for r in &rows {
                out.push_str(&format!(
                    "{:>5}  {:<width$}  {:>6}  {:>5}  {:>8}  {}\n",
                    r.class, r.representative, r.size, r.element_order, r.rational_class, r.cycle_type
                ));
            }
            out
        }
    })
}

fn reflections(params: GroupParams, caps: Caps, format: Format) -> Result<String, CliError> {
    let rg = ReflectionGroup::with_cap(params, caps.enumeration)?;
    let rows: Vec<(String, u64)> = rg
        .reflections
        .members()
        .iter()
        .map(|&t| {
            let e = rg.group.element(t);
            (e.to_string(), e.order())
        })
        .collect();
    Ok(match format {
        Format::Json => to_json(&serde_json::json!({
            "schema": SCHEMA_VERSION,
            "params": params,
            "reflections": rows
                .iter()
                .map(|(e, o)| serde_json::json!({"element": e, "order": o}))
                .collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = String::from("element,order\n");
            for (e, o) in &rows {
                out.push_str(&format!("{},{o}\n", csv_field(e)));
            }
            out
        }
        Format::Text => {
            let mut out = format!("{params}: {} reflections\n", rows.len());
            for (e, o) in &rows {
                out.push_str(&format!("{e}  order {o}\n"));
            }
            out
        }
    })
}

#[derive(Serialize)]
struct LengthRow {
    representative: String,
    size: usize,
    ell_t: u32,
    codim: u32,
}

fn lengths(params: GroupParams, caps: Caps, format: Format) -> Result<String, CliError> {
    let rg = ReflectionGroup::with_cap(params, caps.enumeration)?;
    let rows: Vec<LengthRow> = (0..rg.classes.len())
        .map(|c| {
            let x = rg.classes.representative(c);
            LengthRow {
                representative: rg.group.element(x).to_string(),
                size: rg.classes.size(c),
                ell_t: rg.lengths.lengths[x],
                codim: rg.lengths.codims[x],
            }
        })
        .collect();
    Ok(match format {
        Format::Json => to_json(&serde_json::json!({
            "schema": SCHEMA_VERSION,
            "params": params,
            "sum_ell_t": rg.lengths.sum_lengths(),
            "sum_codim": rg.lengths.sum_codims(),
            "classes": rows,
        })),
        Format::Csv => {
            let mut out = String::from("representative,size,ell_T,codim\n");
            for r in &rows {
                out.push_str(&format!("{},{},{},{}\n", csv_field(&r.representative), r.size, r.ell_t, r.codim));
            }
            out
        }
        Format::Text => {
            let width = rows.iter().map(|r| r.representative.len()).max().unwrap_or(0).max(14);
            let mut out = format!("{:<width$}  {:>6}  {:>4}  {:>5}\n", "representative", "size", "ℓ_T", "codim");
            for r in &rows {
                out.push_str(&format!(
                    "{:<width$}  {:>6}  {:>4}  {:>5}\n",
                    r.representative, r.size, r.ell_t, r.codim
                ));
            }
            out.push_str(&format!(
                "Σ ℓ_T = {}, Σ codim = {}\n",
                rg.lengths.sum_lengths(),
                rg.lengths.sum_codims()
            ));
            out
        }
    })
}

fn poincare(r: u32, tuple: &str, format: Format) -> Result<String, CliError> {
    reject_format(format, &[Format::Text, Format::Json], "poincare")?;
    let lambda: PartitionTuple = tuple.parse().map_err(|e: crate::Error| CliError::Usage(e.to_string()))?;
    let roots = poincare_star_roots(&lambda, r).map_err(|e| CliError::Usage(e.to_string()))?;
    let xi = xi_from_roots(&roots)?;
    let dim = character_dimension(&lambda)?;
    if format == Format::Json {
        return Ok(to_json(&serde_json::json!({
            "schema": SCHEMA_VERSION,
            "r": r,
            "tuple": lambda.to_string(),
            "roots": roots.roots,
            "r_star": roots.star_factored(),
            "r_reciprocal": roots.reciprocal_factored(),
            "xi": xi.to_string(),
            "dimension": dim.to_string(),
        })));
    }
    let list: Vec<String> = roots.roots.iter().map(i64::to_string).collect();
    Ok(format!(
        "tuple: {lambda} (r = {r}, n = {})\nroots: {}\nR*(t) = {}\nR(t) = {}\nxi = {xi}\nchi(1) = {dim}\n",
        lambda.size(),
        list.join(" "),
        roots.star_factored(),
        roots.reciprocal_factored()
    ))
}

fn codim_spectrum(r: u32, n: u32, entries: bool, caps: Caps, format: Format) -> Result<String, CliError> {
    reject_format(format, &[Format::Text, Format::Json], "codim-spectrum")?;
    if r == 0 || n == 0 {
        return Err(CliError::Usage("r and n must be positive".into()));
    }
    let params = GroupParams::new(r, 1, n).map_err(|e| CliError::Usage(e.to_string()))?;
    let s = codim_spectrum_combinatorial(r, n, caps.tuples)?;
    let list = if entries {
        Some(codim_spectrum_entries(r, n, caps.tuples)?)
    } else {
        None
    };
    if format == Format::Json {
        let mut doc = serde_json::to_value(SpectrumDocument::new(params, MatrixKind::Codimension, &s))
            .expect("documents serialize");
        if let Some(list) = list {
            doc["entries"] = list
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "tuple": e.tuple.to_string(),
                        "xi": e.eigenvalue.to_string(),
                        "multiplicity": e.multiplicity.to_string(),
                    })
                })
                .collect();
        }
        return Ok(to_json(&doc));
    }
    let mut out = format!("{params} codimension spectrum via combinatorial\n{s}\n");
    if let Some(list) = list {
        out.push_str("tuple  xi  chi(1)^2\n");
        for e in list {
            out.push_str(&format!("{}  {}  {}\n", e.tuple, e.eigenvalue, e.multiplicity));
        }
    }
    Ok(out)
}
