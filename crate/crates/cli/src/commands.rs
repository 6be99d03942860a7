//! Subcommand implementations. Every command renders to a string plus an
//! exit code; `main` only parses arguments and writes the result.

use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use dynkin_ar::kostant::pair_stats;
use dynkin_ar::minors::{minor_to_partition, quasi_commute};
use dynkin_ar::preproj::{sampled_dual, GENERIC_ATTEMPTS};
use dynkin_ar::{
    derive_seed, ClusterMonomial, Context, Field, KostantPartition, PrimeField, Quiver, Rational, RootSystem,
    TauOrbitPartition,
};

use crate::error::{CliError, CliResult};
use crate::report::{PairReport, Verdict, VerifyReport};
use crate::suites::{pair_report, Prepared, Runner};
use crate::{FieldChoice, SCHEMA};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "table" => Ok(Format::Table),
            other => Err(CliError::Usage(format!("format must be json, csv or table, got '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Hom,
    Ext,
}

#[derive(Debug, Clone)]
pub enum Command {
    Roots { quiver: Quiver, format: Format },
    HomTable { quiver: Quiver, format: Format, kinds: Vec<TableKind> },
    CheckPair { quiver: Quiver, lambda: String, kappa: String, seed: u64, format: Format, timing: bool },
    Enumerate { quiver: Quiver, format: Format, oracle: bool, seed: u64 },
    QuasiCommute { quiver: Quiver, z1: String, z2: String, oracle: bool, seed: u64, format: Format },
    Verify { scope: Vec<Quiver>, suites: Vec<String>, seed: u64, trials: Option<usize>, format: Format, timing: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub exit_code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, exit_code: 0 }
    }
}

pub fn execute(cmd: &Command, field: FieldChoice) -> CliResult<Output> {
    match field {
        FieldChoice::Rational => execute_in::<Rational>(cmd, field),
        FieldChoice::Prime(p) => {
            PrimeField::configure(p)?;
            execute_in::<PrimeField>(cmd, field)
        }
    }
}

fn execute_in<F: Field>(cmd: &Command, field: FieldChoice) -> CliResult<Output> {
    match cmd {
        Command::Roots { quiver, format } => roots(quiver, *format).map(Output::ok),
        Command::HomTable { quiver, format, kinds } => homtable::<F>(quiver, *format, kinds).map(Output::ok),
        Command::CheckPair { quiver, lambda, kappa, seed, format, timing } => {
            let r = check_pair::<F>(quiver, lambda, kappa, *seed, *timing)?;
            let exit_code = i32::from(r.agreement == Some(false));
            let text = match format {
                Format::Json => to_json(&r)?,
                Format::Table => pair_table(&r),
                Format::Csv => return Err(CliError::Usage("check-pair renders as json or table".into())),
            };
            Ok(Output { text, exit_code })
        }
        Command::Enumerate { quiver, format, oracle, seed } => enumerate::<F>(quiver, *format, *oracle, *seed),
        Command::QuasiCommute { quiver, z1, z2, oracle, seed, format } => {
            let r = quasicommute::<F>(quiver, z1, z2, *oracle, *seed)?;
            let exit_code = i32::from(r.agreement == Some(false));
            let text = match format {
                Format::Json => to_json(&r)?,
                Format::Table => {
                    let mut s = format!("{}\n{} vs {}: {}\n", r.quiver, r.z1, r.z2, r.verdict);
                    for f in &r.frozen {
                        s.push_str(&format!("frozen (outside the theorem's hypotheses): {f}\n"));
                    }
                    for [a, b] in &r.failing {
                        s.push_str(&format!("failing pair: {a} vs {b}\n"));
                    }
                    if let Some(e) = r.oracle_ext {
                        s.push_str(&format!("oracle Ext: {e}\n"));
                    }
                    s
                }
                Format::Csv => return Err(CliError::Usage("quasicommute renders as json or table".into())),
            };
            Ok(Output { text, exit_code })
        }
        Command::Verify { scope, suites, seed, trials, format, timing } => {
            let r = verify::<F>(scope, suites, *seed, *trials, *timing, field)?;
            let text = match format {
                Format::Json => to_json(&r)?,
                Format::Table => verify_table(&r),
                Format::Csv => verify_csv(&r)?,
            };
            Ok(Output { text, exit_code: r.exit_status })
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    out.push_str(&(widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  ") + "\n"));
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn to_csv<T: Serialize>(rows: &[T]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootRow {
    pub position: usize,
    pub letter: usize,
    pub coords: String,
    pub segment: String,
    pub theta: bool,
    /// Position of `τβ`, or 0 for a projective root.
    pub tau: usize,
    pub projective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsReport {
    pub schema: u32,
    pub quiver: String,
    pub word: Vec<usize>,
    pub roots: Vec<RootRow>,
}

pub fn root_rows(rs: &RootSystem) -> Vec<RootRow> {
    let theta = rs.theta();
    rs.roots()
        .map(|r| RootRow {
            position: r.position() + 1,
            letter: rs.word()[r.position()] + 1,
            coords: rs.coords(r).iter().map(i64::to_string).collect::<Vec<_>>().join(","),
            segment: rs.segment(r).map(|(i, j)| format!("[{i},{j}]")).unwrap_or_default(),
            theta: theta.contains(&r),
            tau: rs.tau_root(r).map_or(0, |t| t.position() + 1),
            projective: rs.is_projective(r),
        })
        .collect()
}

pub fn roots(q: &Quiver, format: Format) -> CliResult<String> {
    let rs = RootSystem::new(q.clone())?;
    let rows = root_rows(&rs);
    match format {
        Format::Json => to_json(&RootsReport { schema: SCHEMA, quiver: q.to_string(), word: rs.word().iter().map(|i| i + 1).collect(), roots: rows }),
        Format::Csv => to_csv(&rows),
        Format::Table => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.position.to_string(),
                        r.letter.to_string(),
                        r.coords.clone(),
                        r.segment.clone(),
                        if r.theta { "θ".into() } else { String::new() },
                        if r.projective { "-".into() } else { format!("-> {}", r.tau) },
                        if r.projective { "projective".into() } else { String::new() },
                    ]
                })
                .collect();
            Ok(format!("{q}\n") + &render_table(&["pos", "letter", "root", "segment", "theta", "tau", "flags"], &body))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomTableReport {
    pub schema: u32,
    pub quiver: String,
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hom: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ext: Option<Vec<Vec<u32>>>,
}

pub fn homtable<F: Field>(q: &Quiver, format: Format, kinds: &[TableKind]) -> CliResult<String> {
    let ctx: Context<F> = Context::new(RootSystem::new(q.clone())?);
    let (rs, t) = (ctx.root_system(), ctx.table());
    let matrix = |ext: bool| -> Vec<Vec<u32>> {
        rs.roots().map(|a| rs.roots().map(|b| if ext { t.ext(a, b) } else { t.hom(a, b) }).collect()).collect()
    };
    let labels: Vec<String> = rs.roots().map(|r| rs.root_label(r)).collect();
    match format {
        Format::Json => to_json(&HomTableReport {
            schema: SCHEMA,
            quiver: q.to_string(),
            labels,
            hom: kinds.contains(&TableKind::Hom).then(|| matrix(false)),
            ext: kinds.contains(&TableKind::Ext).then(|| matrix(true)),
        }),
        Format::Csv => Ok(kinds.iter().map(|&k| t.to_csv(rs, k == TableKind::Ext)).collect::<Vec<_>>().join("\n")),
        Format::Table => {
            let mut out = format!("{q}\n");
            for &k in kinds {
                let name = if k == TableKind::Ext { "ext" } else { "hom" };
                let mut header = vec![name];
                header.extend(labels.iter().map(String::as_str));
                let body: Vec<Vec<String>> = matrix(k == TableKind::Ext)
                    .into_iter()
                    .zip(&labels)
                    .map(|(row, l)| std::iter::once(l.clone()).chain(row.iter().map(u32::to_string)).collect())
                    .collect();
                out.push_str(&render_table(&header, &body));
            }
            Ok(out)
        }
    }
}

enum PartitionInput {
    Orbit(TauOrbitPartition),
    Kostant(KostantPartition),
}

fn parse_partition(rs: &RootSystem, text: &str) -> CliResult<PartitionInput> {
    let t = text.trim();
    if t.starts_with("parts=") {
        Ok(PartitionInput::Kostant(KostantPartition::parse(rs, t)?))
    } else {
        Ok(PartitionInput::Orbit(TauOrbitPartition::parse(rs, t)?))
    }
}

fn light<F: Field>(q: &Quiver) -> CliResult<Prepared<F>> {
    Ok(Prepared { ctx: Context::new(RootSystem::new(q.clone())?), quiver_text: q.to_string(), parts: Vec::new(), duals: Vec::new() })
}

pub fn check_pair<F: Field>(q: &Quiver, lambda: &str, kappa: &str, seed: u64, timing: bool) -> CliResult<PairReport> {
    let p = light::<F>(q)?;
    let rs = p.rs();
    match (parse_partition(rs, lambda)?, parse_partition(rs, kappa)?) {
        (PartitionInput::Orbit(l), PartitionInput::Orbit(k)) => {
            let dl = p.ctx.determinantal(&l, seed)?;
            let dk = p.ctx.determinantal(&k, seed)?;
            pair_report(&p, &l, &k, &dl, &dk, timing)
        }
        (a, b) => {
            let start = std::time::Instant::now();
            let as_parts = |x: &PartitionInput| match x {
                PartitionInput::Orbit(o) => o.as_kostant(),
                PartitionInput::Kostant(k) => k.clone(),
            };
            let (a, b) = (as_parts(&a), as_parts(&b));
            let tag = |k: &KostantPartition| k.parts().iter().fold(0u64, |h, r| h.wrapping_mul(131).wrapping_add(r.position() as u64 + 1));
            let m = sampled_dual(rs, &p.ctx.module(a.parts()), derive_seed(seed, tag(&a), 1), GENERIC_ATTEMPTS);
            let n = sampled_dual(rs, &p.ctx.module(b.parts()), derive_seed(seed, tag(&b), 2), GENERIC_ATTEMPTS);
            let oracle = p.ctx.oracle(&m, &n)?;
            Ok(PairReport {
                schema: SCHEMA,
                quiver: p.quiver_text.clone(),
                lambda: a.display(rs),
                kappa: b.display(rs),
                verdict: Verdict::OutsideHypotheses,
                criterion: None,
                stats: None,
                oracle: oracle.into(),
                agreement: None,
                window_ambiguity: None,
                set_reading: None,
                timing_us: timing.then(|| start.elapsed().as_micros() as u64),
            })
        }
    }
}

fn pair_table(r: &PairReport) -> String {
    let opt = |b: Option<bool>| b.map_or("-".to_string(), |b| b.to_string());
    let mut rows = vec![
        vec!["quiver".to_string(), r.quiver.clone()],
        vec!["lambda".into(), r.lambda.clone()],
        vec!["kappa".into(), r.kappa.clone()],
        vec!["verdict".into(), serde_json::to_value(r.verdict).unwrap().as_str().unwrap().to_string()],
        vec!["criterion".into(), opt(r.criterion)],
    ];
    if let Some(s) = &r.stats {
        for (name, d) in [("forward", &s.forward), ("backward", &s.backward)] {
            rows.push(vec![
                name.into(),
                format!("R={:?} windowed={} weighted={} m={} p={} surjective={}", d.r_set, d.r_windowed, d.r_weighted, d.m_count, d.p_count, d.surjective),
            ]);
        }
        rows.push(vec!["multiplicity flag".into(), s.multiplicity_flag.to_string()]);
    }
    let o = &r.oracle;
    rows.push(vec!["ext (forms)".into(), o.via_forms.to_string()]);
    rows.push(vec!["ext (cokernels)".into(), o.via_coker.to_string()]);
    rows.push(vec!["hom_lambda".into(), format!("{} / {}", o.hom_lambda[0], o.hom_lambda[1])]);
    rows.push(vec!["agreement".into(), opt(r.agreement)]);
    rows.push(vec!["swapped windows".into(), opt(r.window_ambiguity)]);
    rows.push(vec!["set reading".into(), opt(r.set_reading)]);
    render_table(&["field", "value"], &rows)
}

/// One ordered pair of `enumerate`; CSV column order follows the fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumRow {
    pub lambda: String,
    pub kappa: String,
    pub criterion: bool,
    pub r_fwd: String,
    pub r_windowed_fwd: usize,
    pub r_weighted_fwd: usize,
    pub m_fwd: usize,
    pub p_fwd: usize,
    pub r_bwd: String,
    pub r_windowed_bwd: usize,
    pub r_weighted_bwd: usize,
    pub m_bwd: usize,
    pub p_bwd: usize,
    pub multiplicity_flag: bool,
    pub window_ambiguity: Option<bool>,
    pub set_reading: Option<bool>,
    pub ext: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateReport {
    pub schema: u32,
    pub quiver: String,
    pub partitions: Vec<String>,
    pub pairs: Vec<EnumRow>,
}

fn set_text(s: &[usize]) -> String {
    s.iter().map(usize::to_string).collect::<Vec<_>>().join(";")
}

pub fn enumerate<F: Field>(q: &Quiver, format: Format, oracle: bool, seed: u64) -> CliResult<Output> {
    let prepared = if oracle {
        Runner::<F>::new(seed, None, false).prepare(q)?
    } else {
        let mut p = light::<F>(q)?;
        p.parts = TauOrbitPartition::enumerate(p.rs(), true);
        std::sync::Arc::new(p)
    };
    let (rs, table, parts) = (prepared.rs(), prepared.ctx.table(), &prepared.parts);
    let n = parts.len();
    let index: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let rows: Vec<CliResult<EnumRow>> = index
        .par_iter()
        .map(|&(i, j)| {
            let (l, k) = (&parts[i], &parts[j]);
            let st = pair_stats(rs, table, l, k)?;
            let ext = if oracle { Some(prepared.ctx.oracle(&prepared.duals[i], &prepared.duals[j])?.via_forms) } else { None };
            Ok(EnumRow {
                lambda: l.display(rs),
                kappa: k.display(rs),
                criterion: st.criterion_holds,
                r_fwd: set_text(&st.forward.r_set),
                r_windowed_fwd: st.forward.r_windowed,
                r_weighted_fwd: st.forward.r_weighted,
                m_fwd: st.forward.m_count,
                p_fwd: st.forward.p_count,
                r_bwd: set_text(&st.backward.r_set),
                r_windowed_bwd: st.backward.r_windowed,
                r_weighted_bwd: st.backward.r_weighted,
                m_bwd: st.backward.m_count,
                p_bwd: st.backward.p_count,
                multiplicity_flag: st.multiplicity_flag,
                window_ambiguity: st.printed_window_verdict,
                set_reading: st.set_reading_verdict,
                ext,
            })
        })
        .collect();
    let rows = rows.into_iter().collect::<CliResult<Vec<_>>>()?;
    let disagree = rows.iter().any(|r| r.ext.is_some_and(|e| r.criterion != (e == 0)));
    let text = match format {
        Format::Json => to_json(&EnumerateReport {
            schema: SCHEMA,
            quiver: q.to_string(),
            partitions: parts.iter().map(|p| p.display(rs)).collect(),
            pairs: rows,
        })?,
        Format::Csv => to_csv(&rows)?,
        Format::Table => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.lambda.clone(),
                        r.kappa.clone(),
                        r.criterion.to_string(),
                        format!("{{{}}} {} {} {}", r.r_fwd, r.r_weighted_fwd, r.m_fwd, r.p_fwd),
                        format!("{{{}}} {} {} {}", r.r_bwd, r.r_weighted_bwd, r.m_bwd, r.p_bwd),
                        r.ext.map_or(String::new(), |e| e.to_string()),
                    ]
                })
                .collect();
            format!("{q}\n{n} partitions, {} ordered pairs\n", n * n)
                + &render_table(&["lambda", "kappa", "ext vanishes", "fwd R/count/m/p", "bwd R/count/m/p", "oracle ext"], &body)
        }
    };
    Ok(Output { text, exit_code: i32::from(disagree) })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiCommuteReport {
    pub schema: u32,
    pub quiver: String,
    pub z1: String,
    pub z2: String,
    pub verdict: String,
    pub frozen: Vec<String>,
    pub failing: Vec<[String; 2]>,
    /// `Σ dim Ext¹_Λ` over factor pairs, with `--oracle`.
    pub oracle_ext: Option<usize>,
    pub agreement: Option<bool>,
}

pub fn quasicommute<F: Field>(q: &Quiver, z1: &str, z2: &str, oracle: bool, seed: u64) -> CliResult<QuasiCommuteReport> {
    let p = light::<F>(q)?;
    let rs = p.rs();
    let (a, b) = (ClusterMonomial::parse(z1)?, ClusterMonomial::parse(z2)?);
    let v = quasi_commute(rs, p.ctx.table(), &a, &b)?;
    let oracle_ext = if oracle {
        let dual = |m| -> CliResult<_> { Ok(p.ctx.determinantal(&minor_to_partition(rs, m)?.partition, seed)?) };
        let mut total = 0;
        for &(x, _) in a.factors() {
            for &(y, _) in b.factors() {
                total += p.ctx.oracle(&dual(x)?, &dual(y)?)?.via_forms;
            }
        }
        Some(total)
    } else {
        None
    };
    Ok(QuasiCommuteReport {
        schema: SCHEMA,
        quiver: q.to_string(),
        z1: a.to_string(),
        z2: b.to_string(),
        verdict: if v.quasi_commuting { "quasi-commuting" } else { "not-quasi-commuting" }.to_string(),
        frozen: v.frozen.iter().map(|m| m.to_string()).collect(),
        failing: v.failing.iter().map(|(x, y)| [x.to_string(), y.to_string()]).collect(),
        oracle_ext,
        agreement: oracle_ext.map(|e| v.quasi_commuting == (e == 0)),
    })
}

pub fn verify<F: Field>(
    scope: &[Quiver],
    suites: &[String],
    seed: u64,
    trials: Option<usize>,
    timing: bool,
    field: FieldChoice,
) -> CliResult<VerifyReport> {
    for s in suites {
        if !crate::suites::SUITES.contains(&s.as_str()) {
            return Err(CliError::Usage(format!("unknown suite '{s}'; known: {}", crate::suites::SUITES.join(", "))));
        }
    }
    let runner = Runner::<F>::new(seed, trials, timing);
    let reports = suites.iter().map(|s| runner.run(s, scope)).collect::<CliResult<Vec<_>>>()?;
    Ok(VerifyReport::new(seed, field.to_string(), reports))
}

fn summary_rows(r: &VerifyReport) -> Vec<Vec<String>> {
    r.suites
        .iter()
        .map(|s| {
            let c = &s.counts;
            vec![
                s.suite.clone(),
                c.checked.to_string(),
                c.agreements.to_string(),
                c.mismatches.to_string(),
                c.multiplicity_flags.to_string(),
                c.hypothesis_failed.to_string(),
                s.exit_status.to_string(),
            ]
        })
        .collect()
}

const SUMMARY_HEADER: [&str; 7] = ["suite", "checked", "agreements", "mismatches", "multiplicity_flags", "hypothesis_failed", "exit"];

fn verify_table(r: &VerifyReport) -> String {
    let mut out = format!("seed {}  field {}\n", r.seed, r.field);
    out.push_str(&render_table(&SUMMARY_HEADER, &summary_rows(r)));
    for s in &r.suites {
        for n in &s.notes {
            out.push_str(&format!("[{}] {n}\n", s.suite));
        }
        for m in &s.mismatches {
            out.push_str(&format!("[{}] MISMATCH {} {}: {}\n", s.suite, m.quiver, m.item, m.detail));
        }
    }
    out
}

fn verify_csv(r: &VerifyReport) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SUMMARY_HEADER)?;
    for row in summary_rows(r) {
        w.write_record(&row)?;
    }
    w.flush()?;
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use dynkin_ar::{DynkinType, Root};

    #[test]
    fn table_columns_align() {
        let t = render_table(&["a", "bb"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(t, "a    bb\n---  --\nxyz  1\n");
    }

    #[test]
    fn roots_of_a3() {
        let q = Quiver::linear(DynkinType::A(3)).unwrap();
        let rs = RootSystem::new(q).unwrap();
        let rows = root_rows(&rs);
        assert_eq!(rows.len(), 6);
        let segs: Vec<&str> = rows.iter().map(|r| r.segment.as_str()).collect();
        assert_eq!(segs, ["[1,1]", "[1,2]", "[1,3]", "[2,2]", "[2,3]", "[3,3]"]);
        for r in &rows {
            let expected = rs.tau_root(Root(r.position - 1)).map_or(0, |t| t.position() + 1);
            assert_eq!(r.tau, expected);
        }
    }
}
