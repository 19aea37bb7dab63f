//! Registry of executable identity checks and their structured reports.

mod checks;
pub mod heat;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermite::MAX_INDEX;
use crate::param::DegenerateParam;
use crate::Variant;

pub use heat::{heat_fd_residual, HeatGrid};

/// Report schema version.
pub const SCHEMA_VERSION: u32 = 1;

/// Keys accepted in an override map.
pub const OVERRIDE_KEYS: [&str; 9] = ["n", "m", "lambda", "x", "y", "t", "mu", "a", "b"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    IllDefined,
    Divergent,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::IllDefined => "ILL_DEFINED",
            Status::Divergent => "DIVERGENT",
        })
    }
}

/// Variant label on a report; checks without a disputed form are `Single`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportVariant {
    Paper,
    Corrected,
    Single,
}

impl std::fmt::Display for ReportVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ReportVariant::Paper => "paper",
            ReportVariant::Corrected => "corrected",
            ReportVariant::Single => "single",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub v: u32,
    pub check_name: String,
    pub variant: ReportVariant,
    pub params: BTreeMap<String, f64>,
    /// Maximum residual over the grid; `None` when not a finite number.
    pub residual: Option<f64>,
    pub tolerance: f64,
    pub status: Status,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Which variants of the disputed checks `run_all` executes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VariantPolicy {
    Paper,
    Corrected,
    Both,
}

impl VariantPolicy {
    fn variants(self) -> &'static [Variant] {
        match self {
            VariantPolicy::Paper => &[Variant::Paper],
            VariantPolicy::Corrected => &[Variant::Corrected],
            VariantPolicy::Both => &[Variant::Corrected, Variant::Paper],
        }
    }
}

pub type Overrides = BTreeMap<String, f64>;

/// Parameter axes of a check. Overrides collapse an axis to one value.
#[derive(Debug, Clone)]
pub(crate) struct Grid {
    axes: BTreeMap<&'static str, Vec<f64>>,
}

impl Grid {
    pub(crate) fn values(&self, key: &str) -> &[f64] {
        self.axes
            .get(key)
            .map(Vec::as_slice)
            .unwrap_or_else(|| panic!("check has no `{key}` axis"))
    }

    pub(crate) fn indices(&self, key: &str) -> Vec<u32> {
        self.values(key).iter().map(|&v| v as u32).collect()
    }

    pub(crate) fn params(&self) -> Result<Vec<DegenerateParam>> {
        self.values("lambda").iter().map(|&l| DegenerateParam::new(l)).collect()
    }

    fn apply(&mut self, check: &str, overrides: &Overrides) -> Result<()> {
        for (key, &value) in overrides {
            let Some(&known) = OVERRIDE_KEYS.iter().find(|k| **k == key.as_str()) else {
                return Err(Error::Override(format!(
                    "unknown parameter `{key}`; expected one of {}",
                    OVERRIDE_KEYS.join(", ")
                )));
            };
            if !value.is_finite() {
                return Err(Error::Override(format!("`{key}` must be finite")));
            }
            if (known == "n" || known == "m")
                && (value < 0.0 || value.fract() != 0.0 || value > f64::from(MAX_INDEX))
            {
                return Err(Error::Override(format!(
                    "`{key}` must be an integer in 0..={MAX_INDEX}, got {value}"
                )));
            }
            match self.axes.get_mut(known) {
                Some(axis) => *axis = vec![value],
                None => {
                    return Err(Error::Override(format!(
                        "check `{check}` has no parameter `{key}`"
                    )))
                }
            }
        }
        Ok(())
    }

    fn describe(&self) -> BTreeMap<String, f64> {
        let mut out = BTreeMap::new();
        for (key, values) in &self.axes {
            match values.as_slice() {
                [v] => {
                    out.insert((*key).to_string(), *v);
                }
                vs => {
                    let lo = vs.iter().copied().fold(f64::INFINITY, f64::min);
                    let hi = vs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                    out.insert(format!("{key}_min"), lo);
                    out.insert(format!("{key}_max"), hi);
                }
            }
        }
        out
    }
}

/// Residual of one check run, with a status that overrides the tolerance
/// comparison when the identity is ill-defined or its integral diverges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Outcome {
    pub residual: f64,
    pub forced: Option<Status>,
}

impl Outcome {
    pub(crate) fn residual(residual: f64) -> Self {
        Outcome { residual, forced: None }
    }

    pub(crate) fn exact(equal: bool) -> Self {
        Outcome::residual(if equal { 0.0 } else { 1.0 })
    }

    pub(crate) fn forced(status: Status) -> Self {
        Outcome {
            residual: f64::NAN,
            forced: Some(status),
        }
    }
}

type Axes = Vec<(&'static str, Vec<f64>)>;

/// A registered check.
#[derive(Clone)]
pub struct CheckSpec {
    pub name: &'static str,
    /// Whether the check has a printed form distinct from the corrected one.
    pub disputed: bool,
    pub tolerance: f64,
    axes: fn(Variant) -> Axes,
    run: fn(&Grid, Variant) -> Result<Outcome>,
}

impl std::fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckSpec")
            .field("name", &self.name)
            .field("disputed", &self.disputed)
            .field("tolerance", &self.tolerance)
            .finish_non_exhaustive()
    }
}

impl CheckSpec {
    pub(crate) fn new(
        name: &'static str,
        disputed: bool,
        tolerance: f64,
        axes: fn(Variant) -> Axes,
        run: fn(&Grid, Variant) -> Result<Outcome>,
    ) -> Self {
        CheckSpec {
            name,
            disputed,
            tolerance,
            axes,
            run,
        }
    }

    /// Runs the check. `variant` is ignored unless the check is disputed.
    pub fn execute(&self, variant: Variant, overrides: &Overrides) -> Result<CheckReport> {
        let variant = if self.disputed { variant } else { Variant::Corrected };
        let mut grid = Grid {
            axes: (self.axes)(variant).into_iter().collect(),
        };
        grid.apply(self.name, overrides)?;
        let outcome = (self.run)(&grid, variant)?;
        let residual = outcome.residual.is_finite().then_some(outcome.residual);
        let status = match (outcome.forced, residual) {
            (Some(s), _) => s,
            (None, Some(r)) if r <= self.tolerance => Status::Pass,
            _ => Status::Fail,
        };
        Ok(CheckReport {
            v: SCHEMA_VERSION,
            check_name: self.name.to_string(),
            variant: match (self.disputed, variant) {
                (false, _) => ReportVariant::Single,
                (true, Variant::Paper) => ReportVariant::Paper,
                (true, Variant::Corrected) => ReportVariant::Corrected,
            },
            params: grid.describe(),
            residual,
            tolerance: self.tolerance,
            status,
        })
    }
}

/// Ordered collection of checks; runs are sequential in registration order.
#[derive(Debug, Clone, Default)]
pub struct Registry {
    checks: Vec<CheckSpec>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry::default()
    }

    /// Every identity check shipped with the crate.
    pub fn standard() -> Self {
        Registry {
            checks: checks::standard(),
        }
    }

    pub fn register(&mut self, spec: CheckSpec) {
        self.checks.push(spec);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.name).collect()
    }

    pub fn get(&self, name: &str) -> Result<&CheckSpec> {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::UnknownCheck(name.to_string()))
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    /// Reports for one check under the given policy, corrected first.
    pub fn run_check_policy(
        &self,
        name: &str,
        policy: VariantPolicy,
        overrides: &Overrides,
    ) -> Result<Vec<CheckReport>> {
        let spec = self.get(name)?;
        if !spec.disputed {
            return Ok(vec![spec.execute(Variant::Corrected, overrides)?]);
        }
        policy
            .variants()
            .iter()
            .map(|&v| spec.execute(v, overrides))
            .collect()
    }

    pub fn run_all(&self, policy: VariantPolicy) -> Result<Vec<CheckReport>> {
        if self.is_empty() {
            return Err(Error::EmptyRegistry);
        }
        let mut out = Vec::new();
        for spec in &self.checks {
            out.extend(self.run_check_policy(spec.name, policy, &Overrides::new())?);
        }
        Ok(out)
    }
}

/// Runs one check from the standard registry.
pub fn run_check(name: &str, variant: Variant, overrides: &Overrides) -> Result<CheckReport> {
    Registry::standard().get(name)?.execute(variant, overrides)
}

/// Runs the standard registry.
pub fn run_all(policy: VariantPolicy) -> Result<Vec<CheckReport>> {
    Registry::standard().run_all(policy)
}

/// Finite-difference heat check as a report, with the default tolerance.
pub fn heat_fd_check(n: u32, param: &DegenerateParam, grid: &HeatGrid) -> Result<CheckReport> {
    let residual = heat_fd_residual(n, param, grid)?;
    let params = BTreeMap::from([
        ("n".to_string(), f64::from(n)),
        ("lambda".to_string(), param.lambda()),
        ("x_min".to_string(), grid.x_min),
        ("x_max".to_string(), grid.x_max),
        ("dx".to_string(), grid.dx),
        ("y_max".to_string(), grid.y_max),
        ("dy".to_string(), grid.dy),
    ]);
    Ok(CheckReport {
        v: SCHEMA_VERSION,
        check_name: "heat_fd".to_string(),
        variant: ReportVariant::Single,
        params,
        residual: residual.is_finite().then_some(residual),
        tolerance: checks::HEAT_TOL,
        status: if residual <= checks::HEAT_TOL { Status::Pass } else { Status::Fail },
    })
}

/// True when every corrected and single report passed.
pub fn corrected_all_pass(reports: &[CheckReport]) -> bool {
    reports
        .iter()
        .filter(|r| r.variant != ReportVariant::Paper)
        .all(CheckReport::passed)
}

/// Pretty JSON array of reports, newline-terminated.
pub fn reports_to_json(reports: &[CheckReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::make_param;

    fn pins(pairs: &[(&str, f64)]) -> Overrides {
        pairs.iter().map(|(k, v)| ((*k).to_string(), *v)).collect()
    }

    #[test]
    fn exact_check_reports_zero() {
        let r = run_check("heat_equation_exact", Variant::Corrected, &Overrides::new()).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.residual, Some(0.0));
        assert_eq!(r.variant, ReportVariant::Single);
        assert_eq!(r.v, 1);
    }

    #[test]
    fn rodrigues_variants() {
        let r = run_check("rodrigues", Variant::Paper, &pins(&[("n", 2.0)])).unwrap();
        assert_eq!(r.status, Status::Fail);
        let r = run_check("rodrigues", Variant::Paper, &pins(&[("n", 1.0)])).unwrap();
        assert_eq!(r.status, Status::IllDefined);
        assert_eq!(r.residual, None);
        let r = run_check("rodrigues", Variant::Corrected, &Overrides::new()).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.variant, ReportVariant::Corrected);
    }

    #[test]
    fn even_gf_variants() {
        let r = run_check("even_gf", Variant::Corrected, &Overrides::new()).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.tolerance, 1e-8);
        let r = run_check("even_gf", Variant::Paper, &Overrides::new()).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert!(r.residual.unwrap() > 1e-3);
        assert_eq!(r.params["t"], 0.05);
    }

    #[test]
    fn override_errors() {
        let bad = [
            ("heat_equation_exact", pins(&[("q", 1.0)])),
            ("heat_equation_exact", pins(&[("x", 1.0)])),
            ("heat_equation_exact", pins(&[("n", 2.5)])),
            ("heat_equation_exact", pins(&[("n", -1.0)])),
        ];
        for (name, o) in bad {
            assert!(matches!(run_check(name, Variant::Corrected, &o), Err(Error::Override(_))));
        }
        assert!(matches!(
            run_check("no_such", Variant::Corrected, &Overrides::new()),
            Err(Error::UnknownCheck(_))
        ));
        assert!(matches!(
            run_check("generating_function", Variant::Corrected, &pins(&[("lambda", -1.0)])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn overrides_are_reported() {
        let r = run_check("scaling_relations", Variant::Corrected, &pins(&[("n", 3.0), ("lambda", 2.0)])).unwrap();
        assert_eq!(r.params["n"], 3.0);
        assert_eq!(r.params["lambda"], 2.0);
        assert_eq!(r.params["x_min"], -2.0);
        assert_eq!(r.params["x_max"], 2.0);
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn empty_registry_guard() {
        assert!(matches!(Registry::empty().run_all(VariantPolicy::Both), Err(Error::EmptyRegistry)));
    }

    #[test]
    fn heat_report() {
        let p = make_param(1.0).unwrap();
        let r = heat_fd_check(0, &p, &HeatGrid::stable(-1.0, 1.0, 0.1, 0.2, &p)).unwrap();
        assert_eq!(r.residual, Some(0.0));
        assert!(r.passed());
    }

    #[test]
    fn aggregate_ignores_printed_variant() {
        let mut r = run_check("rodrigues", Variant::Paper, &pins(&[("n", 2.0)])).unwrap();
        assert!(corrected_all_pass(std::slice::from_ref(&r)));
        r.variant = ReportVariant::Corrected;
        assert!(!corrected_all_pass(&[r]));
    }

    #[test]
    fn report_json_shape() {
        let r = run_check("rodrigues", Variant::Paper, &pins(&[("n", 1.0)])).unwrap();
        let v: serde_json::Value = serde_json::from_str(&reports_to_json(&[r])).unwrap();
        let o = &v[0];
        assert_eq!(o["v"], 1);
        assert_eq!(o["check_name"], "rodrigues");
        assert_eq!(o["variant"], "paper");
        assert_eq!(o["status"], "ILL_DEFINED");
        assert!(o["residual"].is_null());
        assert_eq!(o["params"]["n"], 1.0);
    }
}
