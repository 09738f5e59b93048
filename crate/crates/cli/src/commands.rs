use conedet::determinants::{
    fp_asymptotics_reference, logdet_flat_disk, logdet_hyperbolic_cone, logdet_orbifold_cone,
    logdet_poincare_cap, small_eta_asymptotics, verify_identities, zeta_prime0_spherical_cone,
    zeta_prime0_spindle, zeta_prime0_unit_disk_cone, TAG_FLAT_DISK, TAG_POINCARE_CAP,
};
use conedet::{
    ConeGeometry, CurvedDiskGeometry, EvalResult, IdentityReport64, QuadratureConfig64,
    VerifyConfig64,
};

use crate::args::{
    AsymptArgs, DetArgs, Format, Kind, Params, QuadArgs, TableArgs, TableFormat, VerifyArgs,
};
use crate::error::CliError;
use crate::grid::GridSpec;
use crate::output::{self, OutputRecord};

const PARAM_NAMES: [&str; 5] = ["a", "eta", "w", "K", "r"];

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Hyperbolic => "hyperbolic",
            Kind::Orbifold => "orbifold",
            Kind::Spindle => "spindle",
            Kind::Sphericalcone => "sphericalcone",
            Kind::Diskcone => "diskcone",
            Kind::Flatdisk => "flatdisk",
            Kind::Poincarecap => "poincarecap",
        }
    }

    pub fn params(self) -> &'static [&'static str] {
        match self {
            Kind::Hyperbolic => &["a", "eta"],
            Kind::Orbifold => &["w", "eta"],
            Kind::Spindle | Kind::Sphericalcone | Kind::Diskcone => &["a", "K"],
            Kind::Flatdisk => &["r"],
            Kind::Poincarecap => &["eta"],
        }
    }
}

fn canonical(name: &str) -> Option<&'static str> {
    PARAM_NAMES.iter().copied().find(|p| *p == name)
}

impl Params {
    fn get(&self, name: &str) -> Option<f64> {
        match name {
            "a" => self.a,
            "eta" => self.eta,
            "w" => self.w,
            "K" => self.k,
            "r" => self.r,
            _ => None,
        }
    }

    fn set(&mut self, name: &str, value: f64) {
        match name {
            "a" => self.a = Some(value),
            "eta" => self.eta = Some(value),
            "w" => self.w = Some(value),
            "K" => self.k = Some(value),
            "r" => self.r = Some(value),
            _ => {}
        }
    }

    /// Rejects flags that do not belong to `kind`.
    fn check_extraneous(&self, kind: Kind, allowed: &[&str]) -> Result<(), CliError> {
        for name in PARAM_NAMES {
            if self.get(name).is_some() && !allowed.contains(&name) {
                return Err(CliError::Usage(format!(
                    "parameter --{name} does not apply to kind {}",
                    kind.name()
                )));
            }
        }
        Ok(())
    }
}

impl QuadArgs {
    fn config(&self) -> Result<QuadratureConfig64, CliError> {
        let default = QuadratureConfig64::default();
        Ok(QuadratureConfig64::new(
            self.quad_tol.unwrap_or(default.abs_tol),
            default.y_max_cap,
            self.max_subdivisions.unwrap_or(default.max_subdivisions),
        )?)
    }
}

fn orbifold_order(w: f64) -> Result<u32, CliError> {
    if w.fract() != 0.0 || !(0.0..=f64::from(u32::MAX)).contains(&w) {
        return Err(CliError::Usage(format!(
            "invalid parameter `w` = {w}: must be a positive integer"
        )));
    }
    Ok(w as u32)
}

fn closed_form(value: f64, tag: &'static str) -> EvalResult<f64> {
    // closed forms carry only rounding error
    EvalResult {
        value,
        abs_err: 16.0 * f64::EPSILON * value.abs(),
        formula_tag: tag,
    }
}

/// Evaluates `kind` at fully specified `params`.
pub fn evaluate(
    kind: Kind,
    params: &Params,
    quad: &QuadratureConfig64,
) -> Result<OutputRecord, CliError> {
    let mut values = Vec::new();
    for &name in kind.params() {
        let v = params
            .get(name)
            .ok_or_else(|| CliError::Usage(format!("kind {} needs --{name}", kind.name())))?;
        values.push((name, v));
    }
    let p = |i: usize| values[i].1;
    let res = match kind {
        Kind::Hyperbolic => logdet_hyperbolic_cone(ConeGeometry::new(p(0), p(1))?, quad)?,
        Kind::Orbifold => logdet_orbifold_cone(orbifold_order(p(0))?, p(1))?,
        Kind::Spindle => zeta_prime0_spindle(p(0), p(1), quad)?,
        Kind::Sphericalcone => zeta_prime0_spherical_cone(p(0), p(1), quad)?,
        Kind::Diskcone => zeta_prime0_unit_disk_cone(CurvedDiskGeometry::new(p(0), p(1))?, quad)?,
        Kind::Flatdisk => closed_form(logdet_flat_disk(p(0))?, TAG_FLAT_DISK),
        Kind::Poincarecap => closed_form(logdet_poincare_cap(p(0))?, TAG_POINCARE_CAP),
    };
    Ok(OutputRecord {
        formula_tag: res.formula_tag,
        params: values,
        value: res.value,
        abs_err: res.abs_err,
    })
}

pub fn det(args: &DetArgs) -> Result<String, CliError> {
    args.params
        .check_extraneous(args.kind, args.kind.params())?;
    let quad = args.quad.config()?;
    let rec = evaluate(args.kind, &args.params, &quad)?;
    Ok(match args.format {
        Format::Json => output::record_json(&rec) + "\n",
        Format::Csv => output::records_csv(args.kind.params(), &[rec]),
        Format::Plain => output::record_plain(&rec),
    })
}

pub fn table(args: &TableArgs) -> Result<String, CliError> {
    let kind = args.kind;
    if args.grids.len() > 2 {
        return Err(CliError::Usage("at most two --grid dimensions".into()));
    }
    let mut grids = Vec::new();
    let mut names: Vec<&'static str> = Vec::new();
    for text in &args.grids {
        let g = GridSpec::parse(text, true)?;
        let raw = g.param_name.clone().unwrap_or_default();
        let name = canonical(&raw)
            .filter(|n| kind.params().contains(n))
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "malformed grid `{text}`: `{raw}` is not a parameter of kind {}",
                    kind.name()
                ))
            })?;
        if names.contains(&name) || args.params.get(name).is_some() {
            return Err(CliError::Usage(format!(
                "malformed grid `{text}`: `{name}` is given more than once"
            )));
        }
        if name == "w" {
            for v in g.values() {
                orbifold_order(v)?;
            }
        }
        names.push(name);
        grids.push(g);
    }
    args.params.check_extraneous(kind, kind.params())?;
    let quad = args.quad.config()?;

    let outer = grids[0].values();
    let inner = grids
        .get(1)
        .map(GridSpec::values)
        .unwrap_or_else(|| vec![f64::NAN]);
    let mut recs = Vec::with_capacity(outer.len() * inner.len());
    for &x in &outer {
        for &y in &inner {
            let mut params = args.params.clone();
            params.set(names[0], x);
            if let Some(&n) = names.get(1) {
                params.set(n, y);
            }
            recs.push(evaluate(kind, &params, &quad)?);
        }
    }
    Ok(match args.format {
        TableFormat::Csv => output::records_csv(&names, &recs),
        TableFormat::Json => output::records_json(&recs),
    })
}

pub fn asympt(args: &AsymptArgs) -> Result<String, CliError> {
    let w = u32::try_from(args.w)
        .ok()
        .filter(|&w| w >= 1)
        .ok_or_else(|| {
            CliError::Usage(format!(
                "invalid parameter `w` = {}: must be a positive integer",
                args.w
            ))
        })?;
    let grid = GridSpec::parse(&args.grid, false)?;
    let etas = grid.values();
    if etas.iter().any(|&eta| !(eta > 0.0 && eta <= 1.0)) {
        return Err(CliError::Usage(format!(
            "malformed grid `{}`: eta must lie in (0, 1]",
            args.grid
        )));
    }
    let mut header = vec!["eta", "exact", "asympt", "residual"];
    if args.compare_fp {
        header.extend(["fp", "fp_residual"]);
    }
    let mut rows = Vec::with_capacity(etas.len());
    for eta in etas {
        let exact = logdet_orbifold_cone(w, eta)?.value;
        let approx = small_eta_asymptotics(w, eta)?;
        let mut row = vec![eta, exact, approx, exact - approx];
        if args.compare_fp {
            let fp = fp_asymptotics_reference(w, eta)?;
            row.extend([fp, exact - fp]);
        }
        if row.iter().any(|x| !x.is_finite()) {
            return Err(conedet::Error::NonFinite {
                quantity: "asymptotics table",
            }
            .into());
        }
        rows.push(row);
    }
    Ok(match args.format {
        TableFormat::Csv => output::table_csv(&header, &rows),
        TableFormat::Json => output::table_json(&header, &rows),
    })
}

fn report_json(r: &IdentityReport64) -> String {
    format!(
        "{{\"identity_name\":{},\"lhs\":{},\"rhs\":{},\"abs_diff\":{},\"tolerance\":{},\"passed\":{}}}",
        output::json_string(&r.identity_name),
        output::json_real(r.lhs),
        output::json_real(r.rhs),
        output::json_real(r.abs_diff),
        output::json_real(r.tolerance),
        r.passed
    )
}

/// Renders every report. All reports are rendered even when some fail; the
/// caller prints them before reporting the failure.
pub struct VerifyOutcome {
    pub text: String,
    pub failed: usize,
    pub total: usize,
}

pub fn verify(args: &VerifyArgs) -> Result<VerifyOutcome, CliError> {
    let cfg = VerifyConfig64 {
        quad: args.quad.config()?,
        ..VerifyConfig64::default()
    };
    let reports = verify_identities(args.tol, &cfg)?;
    let failed = reports.iter().filter(|r| !r.passed).count();
    let text = match args.format {
        Format::Json => {
            let items: Vec<String> = reports.iter().map(report_json).collect();
            format!("[{}]\n", items.join(","))
        }
        Format::Csv => {
            let mut out = String::from("identity_name,lhs,rhs,abs_diff,tolerance,passed\n");
            for r in &reports {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.identity_name.replace(',', ";"),
                    output::real(r.lhs),
                    output::real(r.rhs),
                    output::real(r.abs_diff),
                    output::real(r.tolerance),
                    r.passed
                ));
            }
            out
        }
        Format::Plain => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&format!(
                    "{} {:<44} abs_diff={} tol={}\n",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.identity_name,
                    output::real(r.abs_diff),
                    output::real(r.tolerance)
                ));
            }
            out.push_str(&format!(
                "{} of {} checks passed\n",
                reports.len() - failed,
                reports.len()
            ));
            out
        }
    };
    Ok(VerifyOutcome {
        text,
        failed,
        total: reports.len(),
    })
}
