//! Batch command-line front end.
//!
//! The binary exposes seven verbs over the library:
//!
//! * `enumerate` — list the labels satisfying the family's nonemptiness
//!   predicate (or only the perfect/super ones with `--perfect`);
//! * `classify` — the full predicate record of one label;
//! * `length` — closed-form and breadth-first word length of one label;
//! * `intersect` — the intersection report of a perfect/super label,
//!   optionally restricted to one flag domain with `--alpha`;
//! * `counts` — cardinalities (group order and predicate census, or the
//!   closed perfect counts with `--perfect`);
//! * `dims` — the dimension triple of the form;
//! * `verify` — run the exact-arithmetic oracle against one theorem
//!   (`--theorem`) or every statement applicable to the form.
//!
//! Every payload is a JSON envelope `{schema_version, verb, form, n, p, q,
//! data}` with canonical (sorted) key order, so identical inputs produce
//! byte-identical output; `--format csv` renders the `data` section as a
//! table instead.  Exhaustive verbs are guarded by a rank cap (default 6,
//! overridable with `--max-n`).  Exit codes: `0` success, `1` validation
//! error, `2` verification failure (counterexamples are in the payload).

use std::collections::BTreeSet;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::classify::{
    self, classify, generate_perfect_harmonic, generate_perfect_major, perfect_harmonic_count,
    perfect_major_count, super_dense, super_generous,
};
use crate::flag_oracle::{verify, OracleError, VerificationReport, THEOREM_IDS};
use crate::intersect::{self, IntersectionReport};
use crate::real_forms::{RealForm, RealFormError, SignatureVector};
use crate::weyl_core::{enumerate_group, group_order, length_bfs, length_paper, SignedPermutation};

/// Outcome of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutcome {
    /// Process exit code: 0 success, 1 validation error, 2 verification
    /// failure.
    pub code: i32,
    /// Payload written to standard output (empty when `--out` is used).
    pub stdout: String,
    /// Diagnostics for standard error.
    pub stderr: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "flagcycle", version, about = "Flag domains, base cycles, and Schubert intersections for the classical real forms", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    /// Rank cap guarding exhaustive computations.
    #[arg(long, global = true, default_value_t = 6)]
    max_n: usize,

    /// Write the payload to a file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// List labels satisfying the family's nonemptiness predicate.
    Enumerate {
        /// Real form code, e.g. `sp2n-r:3`, `so-star:4`, `so-pq:4,2`,
        /// `sp-pq:2,1`.
        #[arg(long)]
        form: String,
        /// Restrict to the perfect (maximal-length) labels.
        #[arg(long)]
        perfect: bool,
    },
    /// Predicate record of one label.
    Classify {
        #[arg(long)]
        form: String,
        /// Label in comma form, e.g. `-3,-2,-1`.
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
    },
    /// Closed-form and breadth-first length of one label.
    Length {
        #[arg(long)]
        form: String,
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
    },
    /// Intersection points of a perfect/super label with the base cycles.
    Intersect {
        #[arg(long)]
        form: String,
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        /// Restrict to one flag domain, e.g. `+-+`.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Cardinalities of the form's label sets.
    Counts {
        #[arg(long)]
        form: String,
        /// Report the closed perfect counts instead of a census.
        #[arg(long)]
        perfect: bool,
    },
    /// Dimension triple of the form.
    Dims {
        #[arg(long)]
        form: String,
    },
    /// Run the exact-arithmetic oracle.
    Verify {
        #[arg(long)]
        form: String,
        /// A single theorem identifier; all applicable statements when
        /// omitted.
        #[arg(long)]
        theorem: Option<String>,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Validation(String),
}

impl From<RealFormError> for CliError {
    fn from(e: RealFormError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<crate::weyl_core::WeylError> for CliError {
    fn from(e: crate::weyl_core::WeylError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Validation(e.to_string())
    }
}

/// Runs the CLI on an argument vector (the first element is the program
/// name) and returns the exit code with the captured output.
///
/// ```
/// use flagcycle::cli::run;
///
/// let args: Vec<String> = ["flagcycle", "dims", "--form", "so-pq:4,2"]
///     .iter().map(|s| s.to_string()).collect();
/// let out = run(&args);
/// assert_eq!(out.code, 0);
/// assert!(out.stdout.contains("\"dim_base_cycle\""));
/// ```
pub fn run(argv: &[String]) -> CliOutcome {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are success paths in clap
            let code = if e.use_stderr() { 1 } else { 0 };
            return CliOutcome {
                code,
                stdout: if code == 0 { e.to_string() } else { String::new() },
                stderr: if code == 0 { String::new() } else { e.to_string() },
            };
        }
    };
    match execute(&cli) {
        Ok((code, payload)) => {
            let rendered = match cli.format {
                Format::Json => serde_json::to_string_pretty(&payload).unwrap(),
                Format::Csv => to_csv(&payload),
            };
            match &cli.out {
                Some(path) => match std::fs::write(path, rendered.as_bytes()) {
                    Ok(()) => CliOutcome {
                        code,
                        stdout: String::new(),
                        stderr: String::new(),
                    },
                    Err(e) => CliOutcome {
                        code: 1,
                        stdout: String::new(),
                        stderr: format!("could not write {path}: {e}"),
                    },
                },
                None => CliOutcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                },
            }
        }
        Err(CliError::Usage(msg)) | Err(CliError::Validation(msg)) => CliOutcome {
            code: 1,
            stdout: String::new(),
            stderr: msg,
        },
    }
}

fn envelope(verb: &str, rf: &RealForm, data: Value) -> Value {
    json!({
        "schema_version": "1",
        "verb": verb,
        "form": rf.code(),
        "n": rf.rank(),
        "p": rf.p(),
        "q": rf.q(),
        "data": data,
    })
}

fn parse_form(code: &str) -> Result<RealForm, CliError> {
    code.parse::<RealForm>()
        .map_err(|e| CliError::Usage(format!("bad form code {code:?}: {e}")))
}

fn parse_perm(rf: &RealForm, text: &str) -> Result<SignedPermutation, CliError> {
    SignedPermutation::parse(text, rf.rank(), rf.weyl_family())
        .map_err(|e| CliError::Usage(format!("bad label {text:?}: {e}")))
}

fn check_cap(rf: &RealForm, max_n: usize) -> Result<(), CliError> {
    if rf.rank() > max_n {
        return Err(CliError::Validation(format!(
            "rank {} exceeds the cap of {max_n}; raise --max-n to force the computation",
            rf.rank()
        )));
    }
    Ok(())
}

fn predicate_labels(rf: &RealForm) -> Result<Vec<String>, CliError> {
    let group = enumerate_group(rf.rank(), rf.weyl_family(), None)?;
    let mut out = Vec::new();
    for w in &group {
        let keep = match rf {
            RealForm::SpR { .. } => classify::is_generous(w)?,
            RealForm::SOStar { .. } => classify::is_dense(w)?,
            RealForm::SOpq { .. } => classify::is_harmonic(rf, w)?,
            RealForm::Sppq { .. } => classify::is_major(rf, w)?,
        };
        if keep {
            out.push(w.to_string());
        }
    }
    Ok(out)
}

fn perfect_labels(rf: &RealForm) -> Result<Vec<String>, CliError> {
    Ok(match rf {
        RealForm::SpR { n } => vec![super_generous(*n)?.to_string()],
        RealForm::SOStar { n } => vec![super_dense(*n)?.to_string()],
        RealForm::SOpq { .. } => generate_perfect_harmonic(rf)?
            .iter()
            .map(|w| w.to_string())
            .collect(),
        RealForm::Sppq { .. } => generate_perfect_major(rf)?
            .iter()
            .map(|w| w.to_string())
            .collect(),
    })
}

/// The verification statements applicable to a form, in canonical order.
pub fn applicable_theorems(rf: &RealForm) -> Vec<&'static str> {
    let mut out = vec!["length-agreement"];
    match rf {
        RealForm::SpR { .. } => out.extend(["generous-equivalence", "supset-completeness"]),
        RealForm::SOStar { .. } => out.extend(["dense-equivalence", "supset-sostar-completeness"]),
        RealForm::SOpq { q, .. } => {
            out.push("harmonic-nonemptiness");
            out.push(if q % 2 == 0 {
                "swite-completeness"
            } else {
                "swito-completeness"
            });
            if rf.rank() == q + 1 {
                out.push("saturation");
            }
        }
        RealForm::Sppq { q, .. } => {
            out.extend(["major-nonemptiness", "swit-completeness"]);
            if rf.rank() == q + 1 {
                out.push("saturation");
            }
        }
    }
    out
}

fn execute(cli: &Cli) -> Result<(i32, Value), CliError> {
    match &cli.verb {
        Verb::Enumerate { form, perfect } => {
            let rf = parse_form(form)?;
            let labels = if *perfect {
                perfect_labels(&rf)?
            } else {
                check_cap(&rf, cli.max_n)?;
                predicate_labels(&rf)?
            };
            let data = json!({ "count": labels.len(), "labels": labels, "perfect": perfect });
            Ok((0, envelope("enumerate", &rf, data)))
        }
        Verb::Classify { form, perm } => {
            let rf = parse_form(form)?;
            check_cap(&rf, cli.max_n)?;
            let w = parse_perm(&rf, perm)?;
            let record = classify(&rf, &w)?;
            Ok((0, envelope("classify", &rf, serde_json::to_value(record).unwrap())))
        }
        Verb::Length { form, perm } => {
            let rf = parse_form(form)?;
            let w = parse_perm(&rf, perm)?;
            let closed = length_paper(&w)?;
            let bfs = if rf.rank() <= cli.max_n {
                Some(length_bfs(&w)?)
            } else {
                None
            };
            let data = json!({ "perm": w.to_string(), "length_paper": closed, "length_bfs": bfs });
            Ok((0, envelope("length", &rf, data)))
        }
        Verb::Intersect { form, perm, alpha } => {
            let rf = parse_form(form)?;
            check_cap(&rf, cli.max_n)?;
            let w = parse_perm(&rf, perm)?;
            let data = match alpha {
                Some(alpha_text) => {
                    let alpha: SignatureVector = alpha_text
                        .parse()
                        .map_err(|e: RealFormError| CliError::Usage(e.to_string()))?;
                    let points = intersect::intersection_points(&rf, &w, &alpha)
                        .map_err(|e| CliError::Validation(e.to_string()))?;
                    let labels: Vec<String> =
                        points.iter().map(|f| f.label().to_string()).collect();
                    json!({ "alpha": alpha.to_string(), "count": labels.len(), "points": labels })
                }
                None => {
                    let report: IntersectionReport = intersect::full_report(&rf, &w)
                        .map_err(|e| CliError::Validation(e.to_string()))?;
                    serde_json::to_value(&report).unwrap()
                }
            };
            Ok((0, envelope("intersect", &rf, data)))
        }
        Verb::Counts { form, perfect } => {
            let rf = parse_form(form)?;
            let data = if *perfect {
                let count = match rf {
                    RealForm::SpR { .. } | RealForm::SOStar { .. } => 1,
                    RealForm::SOpq { .. } => perfect_harmonic_count(&rf)?,
                    RealForm::Sppq { .. } => perfect_major_count(&rf)?,
                };
                json!({ "count": count, "perfect": true })
            } else {
                check_cap(&rf, cli.max_n)?;
                let labels = predicate_labels(&rf)?;
                json!({
                    "group_order": group_order(rf.rank(), rf.weyl_family()),
                    "count": labels.len(),
                    "perfect": false,
                })
            };
            Ok((0, envelope("counts", &rf, data)))
        }
        Verb::Dims { form } => {
            let rf = parse_form(form)?;
            let data = json!({
                "dim_flag_manifold": rf.dim_flag_manifold(),
                "dim_base_cycle": rf.dim_base_cycle(),
                "dim_dual_schubert": rf.dim_dual_schubert(),
            });
            Ok((0, envelope("dims", &rf, data)))
        }
        Verb::Verify { form, theorem } => {
            let rf = parse_form(form)?;
            check_cap(&rf, cli.max_n)?;
            let ids: Vec<&str> = match theorem {
                Some(t) => {
                    if !THEOREM_IDS.contains(&t.as_str()) {
                        let known: BTreeSet<&str> = THEOREM_IDS.iter().copied().collect();
                        return Err(CliError::Usage(format!(
                            "unknown theorem {t:?}; known: {}",
                            known.into_iter().collect::<Vec<_>>().join(", ")
                        )));
                    }
                    vec![t.as_str()]
                }
                None => applicable_theorems(&rf),
            };
            let mut reports: Vec<VerificationReport> = Vec::new();
            for id in ids {
                reports.push(verify(&rf, id)?);
            }
            let all_pass = reports.iter().all(|r| r.pass);
            let data = json!({ "pass": all_pass, "reports": reports });
            let code = if all_pass { 0 } else { 2 };
            Ok((code, envelope("verify", &rf, data)))
        }
    }
}

// ---------------------------------------------------------------------------
// CSV rendering
// ---------------------------------------------------------------------------

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn scalar_to_string(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Renders the `data` section of an envelope as CSV: arrays of flat
/// records become tables, everything else becomes `key,value` lines.
fn to_csv(payload: &Value) -> String {
    let data = payload.get("data").unwrap_or(payload);
    let mut lines = Vec::new();
    match data {
        Value::Array(rows) if rows.iter().all(Value::is_object) && !rows.is_empty() => {
            let mut keys: BTreeSet<&str> = BTreeSet::new();
            for row in rows {
                keys.extend(row.as_object().unwrap().keys().map(String::as_str));
            }
            let keys: Vec<&str> = keys.into_iter().collect();
            lines.push(keys.join(","));
            for row in rows {
                let obj = row.as_object().unwrap();
                let fields: Vec<String> = keys
                    .iter()
                    .map(|k| csv_escape(&obj.get(*k).map(scalar_to_string).unwrap_or_default()))
                    .collect();
                lines.push(fields.join(","));
            }
        }
        Value::Array(items) => {
            lines.push("value".to_string());
            for it in items {
                lines.push(csv_escape(&scalar_to_string(it)));
            }
        }
        Value::Object(map) => {
            lines.push("key,value".to_string());
            flatten_into(&mut lines, "", map);
        }
        other => lines.push(scalar_to_string(other)),
    }
    lines.join("\n")
}

fn flatten_into(lines: &mut Vec<String>, prefix: &str, map: &Map<String, Value>) {
    for (k, v) in map {
        let key = if prefix.is_empty() {
            k.clone()
        } else {
            format!("{prefix}.{k}")
        };
        match v {
            Value::Object(inner) => flatten_into(lines, &key, inner),
            other => lines.push(format!(
                "{},{}",
                csv_escape(&key),
                csv_escape(&scalar_to_string(other))
            )),
        }
    }
}
