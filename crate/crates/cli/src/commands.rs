use annular_nc::annular::{
    build_ncb, build_ncd, build_snc_b, build_snc_d, counterexample_ncb, ncb_poset, ncd_poset,
    snc_b_poset, verify_theorem1, verify_theorem2, verify_theorem3, verify_type_d,
    VerificationReport, VerifyOptions,
};
use annular_nc::noncross::{check_compatible, find_crossing_pattern, genus};
use annular_nc::signed_perm::le_b;
use annular_nc::{AnnulusConfig, SignedPermutation};
use serde_json::{json, Value};

use crate::{Annulus, CliError, Format, ListKind, Outcome, PosetKind, Theorem};

fn config(annulus: Annulus, opts: &VerifyOptions) -> Result<AnnulusConfig, CliError> {
    let Annulus { p, q } = annulus;
    if p == 0 || q == 0 {
        return Err(CliError::Usage(format!("p and q must be at least 1 (got p={p}, q={q})")));
    }
    if p + q > opts.bound {
        return Err(annular_nc::Error::BoundExceeded { rank: p + q, bound: opts.bound }.into());
    }
    Ok(AnnulusConfig::new(p, q)?)
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("json values serialise") + "\n"
}

fn unsupported(format: Format, command: &str) -> CliError {
    CliError::Usage(format!("format {format:?} is not available for {command}").to_lowercase())
}

fn listing<T: ToString + serde::Serialize>(items: Vec<T>, format: Format) -> Result<Outcome, CliError> {
    let text = match format {
        Format::Text => {
            eprintln!("# {} elements", items.len());
            items.iter().map(|x| x.to_string() + "\n").collect()
        }
        Format::Json => pretty(&json!({"count": items.len(), "items": items})),
        Format::Dot => return Err(unsupported(format, "enumerate")),
    };
    Ok(Outcome { text, passed: true })
}

pub fn enumerate(kind: ListKind, annulus: Annulus, format: Format, opts: &VerifyOptions) -> Result<Outcome, CliError> {
    let cfg = config(annulus, opts)?;
    let (p, q) = (cfg.p(), cfg.q());
    match kind {
        ListKind::BPerm => listing(build_snc_b(p, q)?, format),
        ListKind::BPart => listing(build_ncb(p, q)?, format),
        ListKind::DPerm => listing(build_snc_d(p, q)?, format),
        ListKind::DPart => listing(build_ncd(p, q)?, format),
    }
}

fn report_text(r: &VerificationReport) -> String {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let verdict = if r.passed { "passed" } else { "FAILED" };
    let mut out = format!("{} ({}): {verdict}\n", r.theorem, params.join(", "));
    for (k, v) in &r.counts {
        out += &format!("  {k}: {v}\n");
    }
    if let Some(w) = &r.witness {
        out += &format!("  witness: {w}\n");
    }
    out
}

fn need(value: Option<usize>, flag: &str, theorem: Theorem) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("verify {theorem:?} needs -{flag}").to_lowercase()))
}

pub fn verify(
    theorem: Theorem,
    p: Option<usize>,
    q: Option<usize>,
    n: Option<usize>,
    format: Format,
    opts: &VerifyOptions,
) -> Result<Outcome, CliError> {
    let report = match theorem {
        Theorem::T3 => verify_theorem3(need(n, "n", theorem)?)?,
        _ => {
            let (p, q) = (need(p, "p", theorem)?, need(q, "q", theorem)?);
            match theorem {
                Theorem::T1 => verify_theorem1(p, q, opts)?,
                Theorem::T2 => verify_theorem2(p, q, opts)?,
                _ => verify_type_d(p, q, opts)?,
            }
        }
    };
    let text = match format {
        Format::Json => pretty(&serde_json::to_value(&report).expect("reports serialise")),
        Format::Text => report_text(&report),
        Format::Dot => return Err(unsupported(format, "verify")),
    };
    Ok(Outcome { text, passed: report.passed })
}

pub fn hasse(kind: PosetKind, annulus: Annulus, format: Format, opts: &VerifyOptions) -> Result<Outcome, CliError> {
    let cfg = config(annulus, opts)?;
    let (p, q) = (cfg.p(), cfg.q());
    let name = format!("{kind:?}_{p}_{q}").to_lowercase();
    let text = match (kind, format) {
        (PosetKind::Interval, Format::Dot) => snc_b_poset(p, q)?.to_dot(&name, |t| t.double_bracket()),
        (PosetKind::Interval, Format::Json) => pretty(&snc_b_poset(p, q)?.to_json()),
        (PosetKind::Ncb, Format::Dot) => ncb_poset(p, q)?.to_dot(&name, |x| x.to_string()),
        (PosetKind::Ncb, Format::Json) => pretty(&ncb_poset(p, q)?.to_json()),
        (PosetKind::Ncd, Format::Dot) => ncd_poset(p, q)?.to_dot(&name, |x| x.to_string()),
        (PosetKind::Ncd, Format::Json) => pretty(&ncd_poset(p, q)?.to_json()),
        (_, Format::Text) => return Err(unsupported(format, "hasse")),
    };
    Ok(Outcome { text, passed: true })
}

pub fn counterexample(p: usize, q: usize, format: Format) -> Result<Outcome, CliError> {
    let report = counterexample_ncb(p, q)?;
    let text = match format {
        Format::Json => pretty(&serde_json::to_value(&report).expect("reports serialise")),
        Format::Text => {
            let d = report.details.clone().unwrap_or_default();
            let s = |key: &str| d[key].as_str().unwrap_or_default().to_string();
            let mut out = format!("NC^B({p},{q}) is not a lattice\n\n");
            out += &format!("sigma   = {}\ntau     = {}\n", s("sigma"), s("tau"));
            out += &format!("sigma_o = {}\ntau_o   = {}\n\n", s("sigma_o"), s("tau_o"));
            out += &format!("pi    = Ω({}) = {}\n", s("sigma"), s("pi"));
            out += &format!("rho   = Ω({}) = {}\n", s("tau"), s("rho"));
            out += &format!("pi_o  = Ω({}) = {}\n", s("sigma_o"), s("pi_o"));
            out += &format!("rho_o = Ω({}) = {}\n\n", s("tau_o"), s("rho_o"));
            out += "pi_o ≤ pi, pi_o ≤ rho, rho_o ≤ pi, rho_o ≤ rho\n";
            out += &format!("partitions between the lower and upper pair: {}\n", report.counts.get("sandwiched").copied().unwrap_or(0));
            out += &format!("pi ∧ rho = {} (member: {})\n", s("meet"), d["meet_in_ncb"]);
            out += &format!("read back as a permutation: {}\n", s("meet_tau"));
            out += &format!("crossing pattern: {} at {}\n", d["pattern"]["kind"], d["pattern"]["points"]);
            out += &format!("\n{}\n", if report.passed { "all checks passed" } else { "CHECK FAILED" });
            if let Some(w) = &report.witness {
                out += &format!("witness: {w}\n");
            }
            out
        }
        Format::Dot => return Err(unsupported(format, "counterexample")),
    };
    Ok(Outcome { text, passed: report.passed })
}

pub fn check(perm: &str, annulus: Annulus, format: Format) -> Result<Outcome, CliError> {
    let cfg = config(annulus, &VerifyOptions { bound: usize::MAX })?;
    let tau = SignedPermutation::parse(perm, cfg.n())?;
    let ground = tau.to_ground();
    let g = genus(&ground, cfg.gamma())?;
    let below = le_b(&tau, cfg.gamma_signed())?;
    let incompatible = check_compatible(&ground, cfg.gamma())?;
    let pattern = find_crossing_pattern(&ground, cfg.gamma())?;
    let member = g == 0;
    let by_patterns = incompatible.is_none() && pattern.is_none();
    let value = json!({
        "perm": tau.to_string(),
        "p": cfg.p(),
        "q": cfg.q(),
        "member": member,
        "genus": g,
        "below_gamma": below,
        "pattern_test": by_patterns,
        "witness": incompatible.or(pattern),
    });
    let text = match format {
        Format::Json => pretty(&value),
        Format::Text => {
            let mut out = format!("{}: {} of S^B_nc({},{})\n", value["perm"].as_str().unwrap_or_default(), if member { "member" } else { "not a member" }, cfg.p(), cfg.q());
            out += &format!("genus: {g}\nbelow gamma in absolute order: {below}\npattern test: {}\n", if by_patterns { "pass" } else { "fail" });
            if !value["witness"].is_null() {
                out += &format!("witness: {}\n", value["witness"]);
            }
            out
        }
        Format::Dot => return Err(unsupported(format, "check")),
    };
    Ok(Outcome { text, passed: member })
}
