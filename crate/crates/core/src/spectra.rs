//! Reidemeister spectra, property flags and the theorem battery.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::classes::ClassPartition;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::morphism::Morphism;
use crate::search::{enumerate_automorphisms, enumerate_endomorphisms, DEFAULT_PRODUCT_BUDGET};
use crate::structure::{is_nilpotent, is_perfect, is_quasisimple, is_simple};
use crate::subgroup::center;
use crate::twisted::{
    induced_class_map, reidemeister_number, twisted_classes, Method, ReductionCache,
};

/// A multiset of Reidemeister numbers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Spectrum {
    multiplicities: BTreeMap<usize, usize>,
}

impl Spectrum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, value: usize) {
        *self.multiplicities.entry(value).or_default() += 1;
    }

    /// Distinct values, ascending.
    pub fn values(&self) -> Vec<usize> {
        self.multiplicities.keys().copied().collect()
    }

    pub fn contains(&self, value: usize) -> bool {
        self.multiplicities.contains_key(&value)
    }

    pub fn multiplicity(&self, value: usize) -> usize {
        self.multiplicities.get(&value).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &BTreeMap<usize, usize> {
        &self.multiplicities
    }

    /// Number of morphisms counted.
    pub fn total(&self) -> usize {
        self.multiplicities.values().sum()
    }

    pub fn is_subset_of(&self, other: &Spectrum) -> bool {
        self.multiplicities.keys().all(|v| other.contains(*v))
    }
}

impl FromIterator<usize> for Spectrum {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Spectrum::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Spectrum", 2)?;
        st.serialize_field("values", &self.values())?;
        st.serialize_field("multiplicities", &self.multiplicities)?;
        st.end()
    }
}

fn spectrum_of(
    morphisms: &[Morphism],
    classes: &ClassPartition,
    method: Method,
) -> Result<Spectrum> {
    morphisms
        .iter()
        .map(|m| reidemeister_number(m, classes, method))
        .collect()
}

/// `R(φ)` over all automorphisms of `group`.
pub fn spectrum(group: &Arc<FiniteGroup>, method: Method, product_cap: u64) -> Result<Spectrum> {
    let classes = ClassPartition::new(group);
    spectrum_of(
        &enumerate_automorphisms(group, product_cap)?,
        &classes,
        method,
    )
}

/// `R(φ)` over all endomorphisms of `group`.
pub fn extended_spectrum(
    group: &Arc<FiniteGroup>,
    method: Method,
    product_cap: u64,
) -> Result<Spectrum> {
    let classes = ClassPartition::new(group);
    spectrum_of(
        &enumerate_endomorphisms(group, product_cap)?,
        &classes,
        method,
    )
}

/// Structural facts that need no morphism search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub name: String,
    pub order: usize,
    pub degree: usize,
    pub class_number: usize,
    pub class_sizes: Vec<usize>,
    pub center_order: usize,
    pub abelian: bool,
    pub nilpotent: bool,
    pub perfect: bool,
    pub simple: bool,
    pub quasisimple: bool,
}

impl GroupSummary {
    pub fn new(name: &str, group: &Arc<FiniteGroup>) -> Self {
        let classes = ClassPartition::new(group);
        GroupSummary {
            name: name.to_string(),
            order: group.order(),
            degree: group.degree(),
            class_number: classes.count(),
            class_sizes: classes.sizes().to_vec(),
            center_order: center(group).order(),
            abelian: group.is_abelian(),
            nilpotent: is_nilpotent(group),
            perfect: is_perfect(group),
            simple: is_simple(group),
            quasisimple: is_quasisimple(group),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub trivial_spectrum: bool,
    pub trivial_extended_spectrum: Option<bool>,
    pub full_extended_spectrum: Option<bool>,
    pub abelian: bool,
    pub nilpotent: bool,
    pub perfect: bool,
    pub simple: bool,
    pub quasisimple: bool,
    pub odd_order: bool,
}

impl Flags {
    /// Looks a flag up by its serialized name; `None` for unknown names and
    /// for extended flags that were not computed.
    pub fn get(&self, name: &str) -> Option<bool> {
        match name {
            "trivial_spectrum" => Some(self.trivial_spectrum),
            "trivial_extended_spectrum" => self.trivial_extended_spectrum,
            "full_extended_spectrum" => self.full_extended_spectrum,
            "abelian" => Some(self.abelian),
            "nilpotent" => Some(self.nilpotent),
            "perfect" => Some(self.perfect),
            "simple" => Some(self.simple),
            "quasisimple" => Some(self.quasisimple),
            "odd_order" => Some(self.odd_order),
            _ => None,
        }
    }

    pub const NAMES: [&'static str; 9] = [
        "trivial_spectrum",
        "trivial_extended_spectrum",
        "full_extended_spectrum",
        "abelian",
        "nilpotent",
        "perfect",
        "simple",
        "quasisimple",
        "odd_order",
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtendedStatus {
    Computed,
    /// The endomorphism search ran out of budget.
    Skipped,
    NotRequested,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// One entry of the theorem battery. `witness` holds the generator images
/// (1-based) of the first morphism that violated the check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
    pub witness: Option<Vec<Vec<usize>>>,
}

impl Check {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            status: CheckStatus::Pass,
            detail: detail.into(),
            witness: None,
        }
    }

    fn fail(name: &'static str, detail: impl Into<String>, witness: Option<&Morphism>) -> Self {
        Check {
            name,
            status: CheckStatus::Fail,
            detail: detail.into(),
            witness: witness.map(Morphism::generator_image_lists),
        }
    }

    fn not_applicable(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            status: CheckStatus::NotApplicable,
            detail: detail.into(),
            witness: None,
        }
    }

    fn from_witness(
        name: &'static str,
        ok_detail: impl Into<String>,
        failure: Option<(&Morphism, String)>,
    ) -> Self {
        match failure {
            None => Check::pass(name, ok_detail),
            Some((m, why)) => Check::fail(name, why, Some(m)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub name: String,
    pub order: usize,
    pub class_number: usize,
    pub center_order: usize,
    pub spectrum: Spectrum,
    pub extended_status: ExtendedStatus,
    pub extended_spectrum: Option<Spectrum>,
    pub aut_count: usize,
    pub end_count: Option<usize>,
    pub class_preserving_aut_count: usize,
    pub inner_aut_count: usize,
    pub fixed_point_free_end_count: Option<usize>,
    /// `|Out(G)| = |Aut(G)|·|Z(G)| / |G|`.
    pub out_order: usize,
    /// `|Aut_c(G)| / |Inn(G)|`.
    pub outc_order: usize,
    pub flags: Flags,
    pub theorem_battery: Vec<Check>,
}

impl SpectrumReport {
    pub fn battery_passed(&self) -> bool {
        self.theorem_battery
            .iter()
            .all(|c| c.status != CheckStatus::Fail)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    pub method: Method,
    pub product_cap: u64,
    pub extended: bool,
    pub battery: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            method: Method::FixedClasses,
            product_cap: DEFAULT_PRODUCT_BUDGET,
            extended: true,
            battery: true,
        }
    }
}

/// Computes spectra, flags and (optionally) the theorem battery.
///
/// The automorphism search must fit the budget; an endomorphism search that
/// does not is reported as skipped.
pub fn classify(
    name: &str,
    group: &Arc<FiniteGroup>,
    options: ClassifyOptions,
) -> Result<SpectrumReport> {
    let classes = ClassPartition::new(group);
    let k = classes.count();
    let order = group.order();
    let z = center(group).order();
    let inner_aut_count = order / z;

    let auts = enumerate_automorphisms(group, options.product_cap)?;
    let spec = spectrum_of(&auts, &classes, options.method)?;
    let mut class_preserving = 0;
    for a in &auts {
        if a.is_class_preserving(&classes)? {
            class_preserving += 1;
        }
    }

    let (extended_status, ends) = if options.extended {
        match enumerate_endomorphisms(group, options.product_cap) {
            Ok(e) => (ExtendedStatus::Computed, Some(e)),
            Err(Error::BudgetExceeded { .. }) => (ExtendedStatus::Skipped, None),
            Err(e) => return Err(e),
        }
    } else {
        (ExtendedStatus::NotRequested, None)
    };
    let ext = ends
        .as_deref()
        .map(|e| spectrum_of(e, &classes, options.method))
        .transpose()?;
    let fpf_count = match &ends {
        Some(e) => {
            let mut n = 0;
            for m in e {
                if m.is_fixed_point_free()? {
                    n += 1;
                }
            }
            Some(n)
        }
        None => None,
    };

    let quasisimple = is_quasisimple(group);
    let flags = Flags {
        trivial_spectrum: spec.values() == [k],
        trivial_extended_spectrum: ext.as_ref().map(|e| {
            let mut want = vec![1, k];
            want.dedup();
            e.values() == want
        }),
        full_extended_spectrum: ext
            .as_ref()
            .map(|e| e.values() == (1..=k).collect::<Vec<_>>()),
        abelian: group.is_abelian(),
        nilpotent: is_nilpotent(group),
        perfect: is_perfect(group),
        simple: is_simple(group),
        quasisimple,
        odd_order: order % 2 == 1,
    };

    let mut report = SpectrumReport {
        name: name.to_string(),
        order,
        class_number: k,
        center_order: z,
        spectrum: spec,
        extended_status,
        extended_spectrum: ext,
        aut_count: auts.len(),
        end_count: ends.as_ref().map(Vec::len),
        class_preserving_aut_count: class_preserving,
        inner_aut_count,
        fixed_point_free_end_count: fpf_count,
        out_order: auts.len() * z / order,
        outc_order: class_preserving / inner_aut_count,
        flags,
        theorem_battery: Vec::new(),
    };
    if options.battery {
        report.theorem_battery = run_battery(group, &classes, &auts, ends.as_deref(), &report)?;
    }
    Ok(report)
}

/// Runs the theorem battery on its own, with the `checked` method.
pub fn theorem_battery(
    name: &str,
    group: &Arc<FiniteGroup>,
    product_cap: u64,
) -> Result<Vec<Check>> {
    let options = ClassifyOptions {
        method: Method::Checked,
        product_cap,
        extended: true,
        battery: true,
    };
    Ok(classify(name, group, options)?.theorem_battery)
}

fn run_battery(
    group: &Arc<FiniteGroup>,
    classes: &ClassPartition,
    auts: &[Morphism],
    ends: Option<&[Morphism]>,
    report: &SpectrumReport,
) -> Result<Vec<Check>> {
    let k = classes.count();
    let order = group.order();
    let sweep = ends.unwrap_or(auts);
    let sweep_label = if ends.is_some() {
        "endomorphisms"
    } else {
        "automorphisms"
    };
    let mut checks = Vec::new();

    // Per-morphism data, computed by both routes.
    struct Row {
        fixed: usize,
        orbits: usize,
        identity_class: usize,
        fix_order: usize,
        class_preserving: bool,
        fpf: bool,
    }
    let mut rows = Vec::with_capacity(sweep.len());
    for m in sweep {
        let map = induced_class_map(m, classes)?;
        let tp = twisted_classes(m)?;
        rows.push(Row {
            fixed: map.fixed_points(),
            orbits: tp.count(),
            identity_class: tp.identity_class_size(),
            fix_order: m.fixed_subgroup()?.order(),
            class_preserving: m.is_class_preserving(classes)?,
            fpf: m.is_fixed_point_free()?,
        });
    }
    let first = |bad: &dyn Fn(&Row) -> Option<String>| {
        sweep
            .iter()
            .zip(&rows)
            .find_map(|(m, r)| bad(r).map(|why| (m, why)))
    };

    checks.push(Check::from_witness(
        "fixed-classes-equals-orbits",
        format!("{} {sweep_label}", sweep.len()),
        first(&|r| {
            (r.fixed != r.orbits)
                .then(|| format!("{} fixed classes but {} twisted classes", r.fixed, r.orbits))
        }),
    ));

    checks.push(Check::from_witness(
        "orbit-stabiliser",
        format!("|[1]_phi|*|Fix(phi)| = {order}"),
        first(&|r| {
            (r.identity_class * r.fix_order != order)
                .then(|| format!("{} * {} != {order}", r.identity_class, r.fix_order))
        }),
    ));

    checks.push(Check::from_witness(
        "class-number-bound",
        format!("1 <= R <= {k}; R = {k} iff class-preserving; R = 1 iff fixed-point-free"),
        first(&|r| {
            let bad = r.orbits < 1
                || r.orbits > k
                || (r.orbits == k) != r.class_preserving
                || (r.orbits == 1) != r.fpf;
            bad.then(|| format!("R = {} with k = {k}", r.orbits))
        }),
    ));

    let mut kernel_image = None;
    for m in sweep {
        if m.kernel().order() * m.image().order() != order {
            kernel_image = Some((
                m,
                "kernel and image orders do not multiply to |G|".to_string(),
            ));
            break;
        }
    }
    checks.push(Check::from_witness(
        "kernel-image-orders",
        "|ker|*|im| = |G|",
        kernel_image,
    ));

    checks.push(if report.flags.odd_order {
        Check::from_witness(
            "odd-order-parity",
            "every R is odd",
            first(&|r| (r.orbits % 2 == 0).then(|| format!("R = {} is even", r.orbits))),
        )
    } else {
        Check::not_applicable("odd-order-parity", "even order")
    });

    if report.flags.odd_order {
        let mut bad = None;
        for g in 1..order {
            if classes.class_of(g) == classes.class_of(group.inv(g)) {
                bad = Some(g);
                break;
            }
        }
        checks.push(match bad {
            None => Check::pass("inverse-classes-distinct", "[g] != [g^-1] for g != 1"),
            Some(g) => Check::fail(
                "inverse-classes-distinct",
                format!("{} is conjugate to its inverse", group.element(g)),
                None,
            ),
        });
    } else {
        checks.push(Check::not_applicable(
            "inverse-classes-distinct",
            "even order",
        ));
    }

    let k_minus_one_aut = auts.iter().find(|a| {
        k >= 2 && reidemeister_number(a, classes, Method::FixedClasses).ok() == Some(k - 1)
    });
    checks.push(match k_minus_one_aut {
        None => Check::pass(
            "no-k-minus-one-automorphism",
            format!("{} absent from spectrum", k as i64 - 1),
        ),
        Some(a) => Check::fail(
            "no-k-minus-one-automorphism",
            format!("R = {}", k - 1),
            Some(a),
        ),
    });

    let lemma_applies = order > 2 && (report.flags.nilpotent || report.flags.quasisimple);
    checks.push(match (lemma_applies, ends) {
        (false, _) => Check::not_applicable(
            "no-k-minus-one-endomorphism",
            "requires order > 2 and nilpotent or quasisimple",
        ),
        (true, None) => {
            Check::not_applicable("no-k-minus-one-endomorphism", "endomorphisms skipped")
        }
        (true, Some(_)) => Check::from_witness(
            "no-k-minus-one-endomorphism",
            format!("{} absent from extended spectrum", k - 1),
            first(&|r| (r.orbits == k - 1).then(|| format!("R = {}", k - 1))),
        ),
    });

    let exclusion_applies =
        order > 2 && (report.flags.odd_order || report.flags.nilpotent || report.flags.quasisimple);
    checks.push(
        match (exclusion_applies, report.flags.full_extended_spectrum) {
            (false, _) => Check::not_applicable(
                "full-extended-exclusion",
                "requires order > 2 and odd order, nilpotent or quasisimple",
            ),
            (true, None) => {
                Check::not_applicable("full-extended-exclusion", "endomorphisms skipped")
            }
            (true, Some(false)) => {
                Check::pass("full-extended-exclusion", "extended spectrum is not full")
            }
            (true, Some(true)) => {
                Check::fail("full-extended-exclusion", "extended spectrum is full", None)
            }
        },
    );

    checks.push(match (report.flags.quasisimple, ends) {
        (false, _) => Check::not_applicable("quasisimple-dichotomy", "not quasisimple"),
        (true, None) => Check::not_applicable("quasisimple-dichotomy", "endomorphisms skipped"),
        (true, Some(e)) => Check::from_witness(
            "quasisimple-dichotomy",
            "every endomorphism is trivial or bijective",
            e.iter()
                .find(|m| !m.is_trivial() && !m.is_bijective())
                .map(|m| (m, "neither trivial nor bijective".to_string())),
        ),
    });

    let mut cache = ReductionCache::new();
    let mut reduction_failure = None;
    for m in sweep {
        let r = cache.check(m, classes, Method::Checked)?;
        if !r.holds() {
            reduction_failure = Some((
                m,
                format!(
                    "R = {} but R on G/N_phi (|N_phi| = {}) = {}",
                    r.reidemeister, r.n_phi_order, r.reduced_reidemeister
                ),
            ));
            break;
        }
    }
    checks.push(Check::from_witness(
        "reduction-to-automorphism",
        format!(
            "R(phi) = R(induced) on G/N_phi for {} {sweep_label}",
            sweep.len()
        ),
        reduction_failure,
    ));

    let mut inner_failure = None;
    for h in 0..order {
        let m = Morphism::inner(group, h);
        if reidemeister_number(&m, classes, Method::Checked)? != k {
            inner_failure = Some(m);
            break;
        }
    }
    checks.push(match inner_failure {
        None if report
            .class_preserving_aut_count
            .is_multiple_of(report.inner_aut_count) =>
        {
            Check::pass(
                "inner-automorphisms",
                format!("R = {k} for every inner automorphism"),
            )
        }
        None => Check::fail(
            "inner-automorphisms",
            "class-preserving count is not a multiple of |Inn(G)|",
            None,
        ),
        Some(m) => Check::fail(
            "inner-automorphisms",
            "inner automorphism with R != k",
            Some(&m),
        ),
    });

    let all_cp = report.class_preserving_aut_count == report.aut_count;
    checks.push(
        if report.flags.trivial_spectrum == all_cp
            && report.spectrum.multiplicity(k) == report.class_preserving_aut_count
        {
            Check::pass(
                "trivial-spectrum-characterization",
                "trivial iff every automorphism is class-preserving",
            )
        } else {
            Check::fail(
                "trivial-spectrum-characterization",
                "flag and class-preserving count disagree",
                None,
            )
        },
    );

    checks.push(match (ends, &report.extended_spectrum) {
        (Some(e), Some(ext)) => {
            let dichotomy = rows.iter().all(|r| r.class_preserving || r.fpf);
            let fpf = rows.iter().filter(|r| r.fpf).count();
            let consistent = report.flags.trivial_extended_spectrum == Some(dichotomy)
                && ext.multiplicity(1) == fpf
                && ext.total() == e.len()
                && report.spectrum.is_subset_of(ext);
            if consistent {
                Check::pass(
                    "trivial-extended-characterization",
                    "trivial iff every endomorphism is class-preserving or fixed-point-free",
                )
            } else {
                Check::fail(
                    "trivial-extended-characterization",
                    "flag and morphism data disagree",
                    None,
                )
            }
        }
        _ => Check::not_applicable("trivial-extended-characterization", "endomorphisms skipped"),
    });

    Ok(checks)
}
