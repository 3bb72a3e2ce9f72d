//! Check suites behind the `hlk` binary.
//!
//! Each suite takes a list of JSON documents and produces a [`RunReport`]:
//! named pass/fail checks plus a `results` record. Everything except the
//! timing field is a function of the inputs alone.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use hlk::assembler::{assemble, diamond_checks, SpectrumEntry};
use hlk::exactlin::{is_zero_vector, Scalar};
use hlk::gkcoh::{
    sl2_pair, split_p, summarize, validate_module, validate_pair, AdmissibleModule, HodgeNumbers,
    ModuleSummary, ReductivePair,
};
use hlk::io::{
    algebra_from_json, detect, module_from_json, pair_from_json, parse, scalar_json,
    spectrum_from_json, AlgebraFile, FileKind,
};
use hlk::lefschetz::{
    hodge_filtration, hodge_signature, kahler_cone_membership, serre_pairing_check,
    is_product_model, validate_algebra, validate_product_algebra, BigradedAlgebra, ConeMode,
    Lefschetz,
};
use hlk::llgen::{
    default_class, g_even, generate, lambda_kernel_matches, minimal_ideals, phi_form,
    so_phi_equality, spanning_family, stable_under_enlargement, Generated, DEFAULT_CAP,
};
use hlk::report::{Check, Report};
use hlk::{Error, Result};

/// Jacobi is checked on at most this many basis triples.
const JACOBI_TRIPLES: usize = 4096;
/// Checks that need the full structure-constant table (Jacobi, Killing form,
/// bracket hash, ideal census) are only run up to this dimension.
const STRUCTURE_DIM_LIMIT: usize = 120;

/// A document to run a suite on.
#[derive(Clone, Debug)]
pub struct Input {
    pub label: String,
    pub text: String,
}

impl Input {
    pub fn new(label: impl Into<String>, text: impl Into<String>) -> Self {
        Input {
            label: label.into(),
            text: text.into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub mode: ConeMode,
    pub cap: usize,
    /// Truncate modules to this window before computing.
    pub window: Option<i64>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            mode: ConeMode::Full,
            cap: DEFAULT_CAP,
            window: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Validate,
    Lefschetz,
    Llgen,
    Gkcoh,
    Assemble,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Validate,
        Suite::Lefschetz,
        Suite::Llgen,
        Suite::Gkcoh,
        Suite::Assemble,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Validate => "validate",
            Suite::Lefschetz => "lefschetz",
            Suite::Llgen => "llgen",
            Suite::Gkcoh => "gkcoh",
            Suite::Assemble => "assemble",
        }
    }
}

#[derive(Clone, Debug)]
pub struct InputRecord {
    pub label: String,
    pub kind: FileKind,
    pub sha256: String,
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: Suite,
    pub inputs: Vec<InputRecord>,
    pub checks: Report,
    pub results: Value,
    /// Human-readable extra lines for the summary, e.g. a rendered diamond.
    pub notes: Vec<String>,
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.checks.passed()
    }

    /// The report without its timing field.
    pub fn payload(&self) -> Value {
        let inputs: Vec<Value> = self
            .inputs
            .iter()
            .map(|i| json!({"label": i.label, "kind": i.kind.as_str(), "sha256": i.sha256}))
            .collect();
        let checks = serde_json::to_value(&self.checks.checks).expect("checks serialize");
        json!({
            "command": self.command.as_str(),
            "version": env!("CARGO_PKG_VERSION"),
            "inputs": inputs,
            "checks": checks,
            "passed": self.passed(),
            "results": self.results,
        })
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.payload();
        v["timings"] = json!({"total_ms": self.elapsed_ms as u64});
        v
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        let failed = self.checks.failures().count();
        let verdict = if failed == 0 { "PASS" } else { "FAIL" };
        let _ = writeln!(
            s,
            "hlk {}: {verdict} ({} checks, {failed} failed, {} ms)",
            self.command.as_str(),
            self.checks.checks.len(),
            self.elapsed_ms
        );
        for c in self.checks.failures() {
            let _ = writeln!(s, "  FAIL {}: {}", c.name, c.detail.as_deref().unwrap_or(""));
        }
        for n in &self.notes {
            s.push_str(n);
            if !n.ends_with('\n') {
                s.push('\n');
            }
        }
        s
    }
}

struct Loaded {
    label: String,
    kind: FileKind,
    value: Value,
}

fn located(label: &str, e: Error) -> Error {
    Error::InFile(label.to_string(), Box::new(e))
}

fn load(inputs: &[Input]) -> Result<(Vec<Loaded>, Vec<InputRecord>)> {
    if inputs.is_empty() {
        return Err(Error::InvalidParameter("no input files".into()));
    }
    let mut loaded = Vec::new();
    let mut records = Vec::new();
    for i in inputs {
        let value = parse(&i.text).map_err(|e| located(&i.label, e))?;
        let kind = detect(&value).map_err(|e| located(&i.label, e))?;
        records.push(InputRecord {
            label: i.label.clone(),
            kind,
            sha256: hex::encode(Sha256::digest(i.text.as_bytes())),
        });
        loaded.push(Loaded {
            label: i.label.clone(),
            kind,
            value,
        });
    }
    Ok((loaded, records))
}

fn prefixed(prefix: &str, r: Report) -> Report {
    r.checks
        .into_iter()
        .map(|mut c| {
            c.name = format!("{prefix}{}", c.name);
            c
        })
        .collect()
}

/// Product models are validated factorwise, everything else as a dense-leaf model.
fn algebra_checks(a: &BigradedAlgebra) -> Report {
    if is_product_model(a) {
        validate_product_algebra(a)
    } else {
        validate_algebra(a)
    }
}

/// A check whose computation may itself fail; the error becomes the detail.
fn attempt(name: impl Into<String>, f: impl FnOnce() -> Result<Option<String>>) -> Check {
    match f() {
        Ok(failure) => Check::from_failure(name, failure),
        Err(e) => Check::fail(name, e.to_string()),
    }
}

pub fn run_suite(suite: Suite, inputs: &[Input], opts: &Options) -> Result<RunReport> {
    let start = Instant::now();
    let (loaded, records) = load(inputs)?;
    let mut notes = Vec::new();
    let (checks, results) = match suite {
        Suite::Validate => validate_suite(&loaded)?,
        Suite::Lefschetz => lefschetz_suite(&loaded, opts)?,
        Suite::Llgen => llgen_suite(&loaded, opts)?,
        Suite::Gkcoh => gkcoh_suite(&loaded, opts)?,
        Suite::Assemble => assemble_suite(&loaded, opts, &mut notes)?,
    };
    Ok(RunReport {
        command: suite,
        inputs: records,
        checks,
        results,
        notes,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn only_kind(loaded: &[Loaded], kind: FileKind, suite: &str) -> Result<()> {
    match loaded.iter().find(|l| l.kind != kind) {
        Some(l) => Err(Error::InvalidParameter(format!(
            "{}: {suite} takes {} files, got a {} file",
            l.label,
            kind.as_str(),
            l.kind.as_str()
        ))),
        None => Ok(()),
    }
}

fn algebras(loaded: &[Loaded], suite: &str) -> Result<Vec<(String, AlgebraFile)>> {
    only_kind(loaded, FileKind::Algebra, suite)?;
    loaded
        .iter()
        .map(|l| {
            let a = algebra_from_json(&l.value).map_err(|e| located(&l.label, e))?;
            Ok((l.label.clone(), a))
        })
        .collect()
}

struct GkInputs {
    pair: ReductivePair,
    modules: Vec<(String, AdmissibleModule)>,
    spectra: Vec<(String, Vec<SpectrumEntry>)>,
}

/// Pair (default sl2), modules and spectra; algebra files are skipped when
/// `skip_algebras` is set and rejected otherwise.
fn gk_inputs(loaded: &[Loaded], opts: &Options, skip_algebras: bool) -> Result<GkInputs> {
    let mut pair = None;
    let mut modules = Vec::new();
    let mut spectra = Vec::new();
    for l in loaded {
        match l.kind {
            FileKind::Pair => {
                if pair.is_some() {
                    return Err(Error::InvalidParameter(format!("{}: more than one pair", l.label)));
                }
                pair = Some(pair_from_json(&l.value).map_err(|e| located(&l.label, e))?);
            }
            FileKind::Module => {
                let mut m = module_from_json(&l.value).map_err(|e| located(&l.label, e))?;
                if let Some(w) = opts.window {
                    m = m.truncate(w).map_err(|e| located(&l.label, e))?;
                }
                modules.push((l.label.clone(), m));
            }
            FileKind::Spectrum => {
                let s = spectrum_from_json(&l.value).map_err(|e| located(&l.label, e))?;
                spectra.push((l.label.clone(), s));
            }
            FileKind::Algebra if skip_algebras => {}
            FileKind::Algebra => {
                return Err(Error::InvalidParameter(format!(
                    "{}: algebra files are not (g,K) inputs",
                    l.label
                )))
            }
        }
    }
    Ok(GkInputs {
        pair: pair.unwrap_or_else(sl2_pair),
        modules,
        spectra,
    })
}

fn pair_checks(pr: &ReductivePair) -> Report {
    let mut r = prefixed("pair/", validate_pair(pr));
    r.push(attempt("pair/split_p", || {
        let (p, m) = split_p(pr)?.dims();
        Ok((p != m).then(|| format!("dim p⁺ = {p}, dim p⁻ = {m}")))
    }));
    r
}

fn validate_suite(loaded: &[Loaded]) -> Result<(Report, Value)> {
    let mut checks = Report::new();
    let mut results = Vec::new();
    let gk = gk_inputs(loaded, &Options::default(), true)?;
    let module_names: Vec<&str> = gk.modules.iter().map(|(_, m)| m.name()).collect();
    let split = split_p(&gk.pair);
    for l in loaded {
        let prefix = format!("{}/", l.label);
        let r = match l.kind {
            FileKind::Algebra => {
                let a = algebra_from_json(&l.value).map_err(|e| located(&l.label, e))?;
                algebra_checks(&a.algebra)
            }
            FileKind::Pair => pair_checks(&gk.pair),
            FileKind::Module => {
                let m = gk
                    .modules
                    .iter()
                    .find(|(label, _)| label == &l.label)
                    .map(|(_, m)| m)
                    .expect("loaded above");
                match &split {
                    Ok(s) => validate_module(&gk.pair, s, m),
                    Err(e) => std::iter::once(Check::fail("pair_splits", e.to_string())).collect(),
                }
            }
            FileKind::Spectrum => {
                let (_, s) = gk
                    .spectra
                    .iter()
                    .find(|(label, _)| label == &l.label)
                    .expect("loaded above");
                let mut r = Report::new();
                if !module_names.is_empty() {
                    r.push(Check::from_failure(
                        "modules_resolve",
                        s.iter()
                            .find(|e| !module_names.contains(&e.module.as_str()))
                            .map(|e| format!("no module named `{}`", e.module)),
                    ));
                }
                r.push(Check::pass("parsed"));
                r
            }
        };
        results.push(json!({"label": l.label, "kind": l.kind.as_str(), "passed": r.passed()}));
        checks.extend(prefixed(&prefix, r));
    }
    Ok((checks, json!({"files": results})))
}

fn class_json(alg: &BigradedAlgebra, w: &[Scalar]) -> Value {
    let mut o = Map::new();
    for (i, c) in w.iter().enumerate() {
        if !is_zero_vector(std::slice::from_ref(c)) {
            o.insert(alg.basis()[i].name.clone(), scalar_json(c));
        }
    }
    Value::Object(o)
}

fn hodge_json(alg: &BigradedAlgebra) -> Value {
    let g = alg.g();
    json!((0..=g).map(|p| (0..=g).map(|q| alg.hodge_number(p, q)).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn class_checks(lf: &Lefschetz<'_>, mode: ConeMode) -> Report {
    let alg = lf.algebra();
    let g = alg.g();
    let mut r = Report::new();
    for c in lf.hard_lefschetz().checks {
        let keep = match c.name.strip_prefix("hard_lefschetz_r") {
            Some(k) => k.parse::<usize>().map_or(true, |k| mode.requires(g, g - k)),
            None => true,
        };
        if keep {
            r.push(c);
        }
    }
    match lf.triple() {
        Ok(t) => r.extend(t.relations()),
        Err(e) => r.push(Check::fail("sl2_triple", e.to_string())),
    }
    r.push(attempt("lambda_matches_solve", || {
        Ok((lf.lambda()? != lf.lambda_by_solve()?).then(|| "constructive Λ differs".to_string()))
    }));
    r.push(attempt("decomposition_round_trip", || {
        for i in 0..alg.dim() {
            let e = alg.basis_vector(i);
            let parts = lf.decompose(&e)?;
            if lf.reassemble(&parts) != e {
                return Ok(Some(format!("{} is not recovered", alg.basis()[i].name)));
            }
            let r = alg.degree(i);
            if let Some((s, _)) = parts.iter().find(|(s, x)| !lf.primitive(r - 2 * s).contains(x)) {
                return Ok(Some(format!("component s = {s} of {} is not primitive", alg.basis()[i].name)));
            }
        }
        Ok(None)
    }));
    if lf.is_kahler_type() {
        match lf.polarization_checks() {
            Ok(p) => r.extend(p),
            Err(e) => r.push(Check::fail("polarization", e.to_string())),
        }
    }
    r
}

fn lefschetz_suite(loaded: &[Loaded], opts: &Options) -> Result<(Report, Value)> {
    let mut checks = Report::new();
    let mut results = Vec::new();
    for (label, file) in algebras(loaded, "lefschetz")? {
        let alg = &file.algebra;
        let valid = algebra_checks(alg);
        let ok = valid.passed();
        checks.extend(prefixed(&format!("{label}/validate/"), valid));
        if !ok {
            results.push(json!({"label": label, "name": file.name, "valid": false}));
            continue;
        }
        let classes = if alg.kahler_classes().is_empty() {
            default_class(alg).into_iter().collect()
        } else {
            alg.kahler_classes().to_vec()
        };
        if classes.is_empty() {
            checks.push(Check::fail(format!("{label}/kahler_class"), "no class in the Kähler cone"));
        }
        let mut class_results = Vec::new();
        for (k, w) in classes.iter().enumerate() {
            let prefix = format!("{label}/class{k}/");
            let in_cone = kahler_cone_membership(alg, w, opts.mode);
            checks.push(Check::from_failure(
                format!("{prefix}in_cone_{}", opts.mode.as_str()),
                (!in_cone).then(|| format!("not in the {} cone", opts.mode.as_str())),
            ));
            let lf = match Lefschetz::new(alg, w) {
                Ok(lf) => lf,
                Err(e) => {
                    checks.push(Check::fail(format!("{prefix}lefschetz"), e.to_string()));
                    continue;
                }
            };
            checks.extend(prefixed(&prefix, class_checks(&lf, opts.mode)));
            let primitive: Vec<usize> = (0..=alg.g()).map(|r| lf.primitive(r).dim()).collect();
            class_results.push(json!({
                "class": class_json(alg, w),
                "in_cone": in_cone,
                "kahler_type": lf.is_kahler_type(),
                "primitive_dims": primitive,
            }));
        }
        checks.extend(prefixed(&format!("{label}/serre/"), serre_pairing_check(alg)));
        for n in 0..=alg.max_degree() {
            checks.extend(prefixed(&format!("{label}/filtration/"), hodge_filtration(alg, n).opposedness(alg)));
        }
        let signature = if alg.g() % 2 == 0 {
            let s = hodge_signature(alg)?;
            checks.push(Check::from_failure(
                format!("{label}/signature_methods_agree"),
                (!s.agree()).then(|| format!("formula {} ≠ congruence {}", s.formula, s.congruence)),
            ));
            serde_json::to_value(&s)?
        } else {
            Value::Null
        };
        let betti: Vec<usize> = (0..=alg.max_degree()).map(|r| alg.betti(r)).collect();
        results.push(json!({
            "label": label,
            "name": file.name,
            "valid": true,
            "g": alg.g(),
            "hodge_numbers": hodge_json(alg),
            "betti": betti,
            "signature": signature,
            "classes": class_results,
        }));
    }
    Ok((checks, json!({"mode": opts.mode.as_str(), "algebras": results})))
}

fn generated_checks(alg: &BigradedAlgebra, gen: &Generated, cap: usize) -> Report {
    let l = &gen.algebra;
    let mut r = Report::new();
    r.push(Check::from_failure(
        "closed",
        (!l.is_closed()).then(|| format!("closure stopped at the cap {cap}")),
    ));
    if l.dim() <= STRUCTURE_DIM_LIMIT {
        r.push(attempt("jacobi", || {
            Ok((!l.jacobi_holds(JACOBI_TRIPLES)?).then(|| "Jacobi identity fails".to_string()))
        }));
        if alg.g() == 2 {
            r.push(attempt("killing_nondegenerate", || {
                let k = l.killing_form()?;
                Ok((k.rank() != k.rows()).then(|| format!("Killing form has rank {} < {}", k.rank(), k.rows())))
            }));
        }
    }
    r.push(attempt("stable_under_enlargement", || {
        Ok((!stable_under_enlargement(alg, gen, cap)?).then(|| "a further cone class enlarges the algebra".to_string()))
    }));
    if alg.g() == 2 {
        r.push(attempt("lambda_kernel_matches", || {
            Ok((!lambda_kernel_matches(alg, &gen.family[0])?).then(|| "ker Λ ≠ ker L on H²".to_string()))
        }));
    }
    r
}

fn llgen_suite(loaded: &[Loaded], opts: &Options) -> Result<(Report, Value)> {
    let mut checks = Report::new();
    let mut results = Vec::new();
    for (label, file) in algebras(loaded, "llgen")? {
        let alg = &file.algebra;
        let valid = algebra_checks(alg);
        let ok = valid.passed();
        checks.extend(prefixed(&format!("{label}/validate/"), valid));
        if !ok {
            results.push(json!({"label": label, "name": file.name, "valid": false}));
            continue;
        }
        let prefix = format!("{label}/");
        let (target, gen, so_phi) = if alg.g() == 2 {
            let (even, gen) = match g_even(alg, opts.cap) {
                Ok(x) => x,
                Err(e) => {
                    checks.push(Check::fail(format!("{prefix}generate"), e.to_string()));
                    continue;
                }
            };
            let phi = phi_form(&even)?;
            let v = so_phi_equality(&phi, &gen.algebra);
            checks.push(Check::from_failure(
                format!("{prefix}members_annihilate_phi"),
                (!v.members_annihilate).then(|| "some member does not annihilate φ".to_string()),
            ));
            checks.push(Check::from_failure(
                format!("{prefix}phi_nondegenerate"),
                (!v.phi_nondegenerate).then(|| "φ is degenerate".to_string()),
            ));
            checks.push(Check::from_failure(
                format!("{prefix}equals_so_phi"),
                (!v.equal).then(|| format!("dimension {} vs so(φ) {}", v.dim, v.expected_dim)),
            ));
            (even, gen, serde_json::to_value(&v)?)
        } else {
            let Some(w) = default_class(alg) else {
                checks.push(Check::fail(format!("{prefix}kahler_class"), "no class in the Kähler cone"));
                continue;
            };
            let gen = match spanning_family(alg, &w).and_then(|f| generate(alg, f, opts.cap)) {
                Ok(g) => g,
                Err(e) => {
                    checks.push(Check::fail(format!("{prefix}generate"), e.to_string()));
                    continue;
                }
            };
            (alg.clone(), gen, Value::Null)
        };
        checks.extend(prefixed(&prefix, generated_checks(&target, &gen, opts.cap)));
        let l = &gen.algebra;
        let small = l.is_closed() && l.dim() <= STRUCTURE_DIM_LIMIT;
        let ideals = if small {
            Some(minimal_ideals(l)?.iter().map(|i| i.dim()).collect::<Vec<_>>())
        } else {
            None
        };
        let hash = if small { l.bracket_table_hash().ok() } else { None };
        let family: Vec<Value> = gen.family.iter().map(|w| class_json(&target, w)).collect();
        results.push(json!({
            "label": label,
            "name": file.name,
            "valid": true,
            "ambient_dim": l.ambient(),
            "family": family,
            "structure_checks": if small { "run" } else { "skipped: dimension above limit" },
            "dim": l.dim(),
            "closed": l.is_closed(),
            "center_dim": l.center().dim(),
            "derived_dim": l.derived().dim(),
            "minimal_ideal_dims": ideals,
            "bracket_table_sha256": hash,
            "so_phi": so_phi,
        }));
    }
    Ok((checks, json!({"cap": opts.cap, "algebras": results})))
}

fn summaries(gk: &GkInputs) -> Result<(Report, Vec<(String, ModuleSummary)>)> {
    let mut checks = pair_checks(&gk.pair);
    let mut out = Vec::new();
    for (label, m) in &gk.modules {
        let s = summarize(&gk.pair, m).map_err(|e| located(label, e))?;
        checks.extend(prefixed(&format!("{label}/"), s.checks.clone()));
        out.push((label.clone(), s));
    }
    Ok((checks, out))
}

fn summary_json(label: &str, s: &ModuleSummary) -> Result<Value> {
    let mut v = serde_json::to_value(s)?;
    if let Value::Object(o) = &mut v {
        o.remove("checks");
        o.insert("label".into(), json!(label));
        o.insert("contributes".into(), json!(s.contributes()));
    }
    Ok(v)
}

fn gkcoh_suite(loaded: &[Loaded], opts: &Options) -> Result<(Report, Value)> {
    let gk = gk_inputs(loaded, opts, false)?;
    if !gk.spectra.is_empty() {
        return Err(Error::InvalidParameter("gkcoh takes a pair and modules; use assemble for spectra".into()));
    }
    if gk.modules.is_empty() {
        return Err(Error::InvalidParameter("gkcoh needs at least one module".into()));
    }
    let (checks, sums) = summaries(&gk)?;
    let modules = sums.iter().map(|(l, s)| summary_json(l, s)).collect::<Result<Vec<_>>>()?;
    Ok((checks, json!({"pair": gk.pair.name(), "modules": modules})))
}

/// Rows `h^{p,n−p}` for `n = 2g, …, 0`, centred.
pub fn render_diamond(h: &HodgeNumbers) -> String {
    let g = h.g;
    let rows: Vec<String> = (0..=2 * g)
        .rev()
        .map(|n| {
            (0..=g)
                .rev()
                .filter(|&p| n >= p && n - p <= g)
                .map(|p| h.get(p, n - p).to_string())
                .collect::<Vec<_>>()
                .join("   ")
        })
        .collect();
    let width = rows.iter().map(|r| r.chars().count()).max().unwrap_or(0);
    let mut s = String::new();
    for r in rows {
        let pad = (width - r.chars().count()) / 2;
        let _ = writeln!(s, "  {}{r}", " ".repeat(pad));
    }
    s
}

fn assemble_suite(loaded: &[Loaded], opts: &Options, notes: &mut Vec<String>) -> Result<(Report, Value)> {
    let gk = gk_inputs(loaded, opts, false)?;
    let [(spectrum_label, spectrum)] = gk.spectra.as_slice() else {
        return Err(Error::InvalidParameter("assemble needs exactly one spectrum file".into()));
    };
    let (mut checks, sums) = summaries(&gk)?;
    let mut by_name = BTreeMap::new();
    for (label, s) in &sums {
        if by_name.insert(s.module.clone(), s.clone()).is_some() {
            return Err(Error::InvalidParameter(format!("{label}: module `{}` given twice", s.module)));
        }
    }
    let g = split_p(&gk.pair)?.dims().0;
    let a = assemble(g, spectrum, &by_name).map_err(|e| located(spectrum_label, e))?;
    checks.extend(prefixed("diamond/", diamond_checks(&a)));
    let diamond = render_diamond(&a.hodge);
    notes.push(format!("Hodge diamond (g = {g}):\n{diamond}"));
    if !a.flagged.is_empty() {
        notes.push(format!("not contributing: {}", a.flagged.join(", ")));
    }
    let modules = sums.iter().map(|(l, s)| summary_json(l, s)).collect::<Result<Vec<_>>>()?;
    Ok((
        checks,
        json!({
            "pair": gk.pair.name(),
            "g": g,
            "hodge_numbers": a.hodge.h,
            "betti": a.bettis(),
            "ledger": serde_json::to_value(&a.ledger)?,
            "flagged": a.flagged,
            "lefschetz_ranks": a.lefschetz_ranks,
            "diamond": diamond,
            "modules": modules,
        }),
    ))
}
