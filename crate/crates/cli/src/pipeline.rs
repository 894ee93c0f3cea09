//! lattice → resonance → multinets → certificates → oracle → cross-checks.

use std::collections::BTreeMap;
use std::time::Duration;

use anyhow::{bail, Result};
use log::{info, warn};

use arrangement_core::arrgeo::{intersection_lattice, known_multinets, Arrangement, Lattice};
use arrangement_core::exact::{Cyclo, RootOfUnity};
use arrangement_core::multinet::{
    direction_count, enumerate_multinets, monodromy_lower_bounds, nontriviality_certificate,
    realize_pencil, validate_multinet, Conclusion, EnumerationError, EnumerationOptions,
    MultinetStructure,
};
use arrangement_core::oscohom::{resonance_components, H1Vector, Os2, Provenance};
use arrangement_core::pi1cover::{
    cover_monodromy, eigenspace_dim, milnor_eigenspaces_from_presentation, randell_presentation,
    total_degree_epi, wiring_diagram, Character, GroupPresentation, WiringError,
};

use crate::report::*;

/// Which parts of the report to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Lattice,
    Resonance,
    Multinets,
    Milnor,
    Certify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Lattice => "lattice",
            Command::Resonance => "resonance",
            Command::Multinets => "multinets",
            Command::Milnor => "milnor",
            Command::Certify => "certify",
        }
    }

    fn wants_lattice(self) -> bool {
        matches!(self, Command::Analyze | Command::Lattice | Command::Resonance)
    }

    fn wants_multinets(self) -> bool {
        matches!(
            self,
            Command::Analyze | Command::Resonance | Command::Multinets | Command::Certify
        )
    }

    fn wants_resonance(self) -> bool {
        matches!(self, Command::Analyze | Command::Resonance)
    }

    fn wants_certificates(self) -> bool {
        matches!(self, Command::Analyze | Command::Certify)
    }

    fn wants_eigenspaces(self) -> bool {
        matches!(self, Command::Analyze | Command::Milnor)
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    /// Multinet class counts to search; each must be 3 or 4.
    pub ks: Vec<usize>,
    pub reduced_only: bool,
    pub max_mu: u32,
    pub max_support: Option<usize>,
    pub budget: Option<Duration>,
    /// Defaults to the last line.
    pub infinity_line: Option<usize>,
    pub presentation: Option<GroupPresentation>,
    pub characters: Vec<Character>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            ks: vec![3, 4],
            reduced_only: false,
            max_mu: 4,
            max_support: None,
            budget: None,
            infinity_line: None,
            presentation: None,
            characters: Vec::new(),
        }
    }
}

pub fn run(arr: &Arrangement, cmd: Command, opts: &Options) -> Result<AnalysisReport> {
    let d = arr.d();
    for &k in &opts.ks {
        if !(3..=4).contains(&k) {
            bail!("--k must be 3 or 4, got {k}");
        }
    }
    if opts.max_mu == 0 {
        bail!("--max-mu must be positive");
    }
    if let Some(l) = opts.infinity_line {
        if l >= d {
            bail!("--infinity-line {l} out of range (arrangement has {d} lines)");
        }
    }

    info!("computing intersection lattice of {} ({d} lines)", arr.name());
    let lattice = intersection_lattice(arr);
    let mut checks = vec![lattice_check(&lattice)];

    let multinets = if cmd.wants_multinets() {
        Some(multinet_section(arr, &lattice, opts, &mut checks))
    } else {
        None
    };

    let resonance = if cmd.wants_resonance() {
        let structures: Vec<MultinetStructure> = multinets
            .as_ref()
            .map(|s| s.multinets.iter().map(|m| m.structure.clone()).collect())
            .unwrap_or_default();
        info!("assembling resonance components");
        let components = resonance_components(&lattice, &structures);
        resonance_checks(&lattice, &components, &mut checks);
        let local = components
            .iter()
            .filter(|c| matches!(c.provenance, Provenance::Local { .. }))
            .count();
        Some(ResonanceSection {
            local,
            multinet: components.len() - local,
            components,
        })
    } else {
        None
    };

    let certificates = match (&multinets, cmd.wants_certificates()) {
        (Some(section), true) => Some(certificate_records(section, d, &mut checks)),
        _ => None,
    };

    let eigenspaces = if cmd.wants_eigenspaces() {
        Some(eigen_section(
            arr,
            opts,
            multinets.as_ref(),
            certificates.as_deref(),
            &mut checks,
        )?)
    } else {
        None
    };

    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        command: cmd.name().to_string(),
        arrangement: summary(arr),
        lattice: cmd.wants_lattice().then(|| lattice_section(&lattice)),
        resonance,
        multinets,
        certificates,
        eigenspaces,
        consistency: checks,
    })
}

fn summary(arr: &Arrangement) -> ArrangementSummary {
    ArrangementSummary {
        name: arr.name().to_string(),
        d: arr.d(),
        cyclotomic_order: arr.order(),
        complexified_real: arr.is_real(),
        lines: arr.lines().iter().map(|l| l.coeffs().clone()).collect(),
    }
}

fn lattice_section(lattice: &Lattice) -> LatticeSection {
    LatticeSection {
        census: lattice.multiplicity_census(),
        points: lattice
            .points()
            .iter()
            .map(|p| PointEntry {
                point: p.point.clone(),
                incident: p.incident.clone(),
                multiplicity: p.multiplicity(),
            })
            .collect(),
    }
}

fn lattice_check(lattice: &Lattice) -> Check {
    let d = lattice.d();
    let total: usize = lattice
        .points()
        .iter()
        .map(|p| p.multiplicity() * (p.multiplicity() - 1) / 2)
        .sum();
    Check::new(
        "lattice.counting_identity",
        lattice.counting_identity_holds(),
        format!("sum of C(m_X, 2) = {total}, C(d, 2) = {}", d * (d - 1) / 2),
    )
}

fn multinet_section(
    arr: &Arrangement,
    lattice: &Lattice,
    opts: &Options,
    checks: &mut Vec<Check>,
) -> MultinetSection {
    let d = arr.d();
    let mut searches = Vec::new();
    let mut found: BTreeMap<MultinetStructure, Vec<&'static str>> = BTreeMap::new();
    for &k in &opts.ks {
        let eo = EnumerationOptions {
            k,
            reduced_only: opts.reduced_only,
            max_mu: opts.max_mu,
            max_support: opts.max_support,
            time_budget: opts.budget,
        };
        info!("searching multinets with k = {k}");
        let (list, exhaustive) = match enumerate_multinets(arr, lattice, &eo) {
            Ok(list) => (list, true),
            Err(EnumerationError::BudgetExceeded { partial }) => {
                warn!("multinet search for k = {k} hit the time budget; results are partial");
                (partial, false)
            }
            Err(e) => unreachable!("k validated: {e}"),
        };
        searches.push(SearchRecord {
            k,
            reduced_only: opts.reduced_only,
            max_mu: opts.max_mu,
            max_support: opts.max_support,
            exhaustive,
            found: list.len(),
        });
        for mn in list {
            found.entry(mn).or_default().push("search");
        }
    }

    let mut catalog_ok = true;
    for known in known_multinets(arr.name()) {
        match validate_multinet(arr, lattice, &known.classes, &known.mu) {
            Ok(mn) => found.entry(mn).or_default().push("catalog"),
            Err(e) => {
                catalog_ok = false;
                checks.push(Check::new(
                    "multinets.catalog_valid",
                    false,
                    format!("catalog multinet {:?} rejected: {e}", known.classes),
                ));
            }
        }
    }
    if catalog_ok {
        checks.push(Check::new(
            "multinets.catalog_valid",
            true,
            "every catalog multinet passes the axioms",
        ));
    }

    let multinets: Vec<MultinetEntry> = found
        .into_iter()
        .map(|(mn, mut sources)| {
            sources.dedup();
            let (pencil, pencil_error) = match realize_pencil(arr, &mn) {
                Ok(p) => (Some(p), None),
                Err(e) => (None, Some(e.to_string())),
            };
            let bounds = if pencil.is_some() {
                monodromy_lower_bounds(&mn, d)
            } else {
                Vec::new()
            };
            MultinetEntry {
                sources,
                k: mn.k(),
                reduced: mn.is_reduced(),
                full_support: mn.is_full_support(d),
                weighted_base_count: mn.weighted_base_count(),
                direction_count: direction_count(&mn),
                pencil,
                pencil_error,
                bounds,
                structure: mn,
            }
        })
        .collect();

    multinet_checks(arr, lattice, &multinets, checks);
    MultinetSection {
        exhaustive: searches.iter().all(|s| s.exhaustive),
        searches,
        multinets,
    }
}

fn multinet_checks(
    arr: &Arrangement,
    lattice: &Lattice,
    entries: &[MultinetEntry],
    checks: &mut Vec<Check>,
) {
    let revalidated = entries.iter().all(|m| {
        let s = &m.structure;
        validate_multinet(arr, lattice, s.classes(), s.mu_pairs()).as_ref() == Ok(s)
    });
    checks.push(Check::new(
        "multinets.revalidate",
        revalidated,
        format!("{} multinet(s) re-checked against the axioms", entries.len()),
    ));

    let unrealized: Vec<usize> = (0..entries.len())
        .filter(|&i| entries[i].pencil.is_none())
        .collect();
    checks.push(Check::new(
        "multinets.pencil_realized",
        unrealized.is_empty(),
        if unrealized.is_empty() {
            "every multinet spans a pencil of dimension 2".to_string()
        } else {
            format!("multinets {unrealized:?} do not realize a pencil")
        },
    ));

    let bad_count: Vec<usize> = (0..entries.len())
        .filter(|&i| {
            let e = entries[i].structure.e() as u64;
            entries[i].weighted_base_count != e * e
        })
        .collect();
    checks.push(Check::new(
        "multinets.base_count",
        bad_count.is_empty(),
        if bad_count.is_empty() {
            "sum of n_X^2 over base points equals e^2".to_string()
        } else {
            format!("multinets {bad_count:?} violate sum n_X^2 = e^2")
        },
    ));

    let d = arr.d() as u32;
    let bounds_ok = entries.iter().all(|m| {
        m.bounds.iter().all(|b| {
            !b.lambda.is_one() && d.is_multiple_of(b.lambda.order()) && b.bound == m.k - 2 && b.bound >= 1
        })
    });
    checks.push(Check::new(
        "multinets.bounds_well_formed",
        bounds_ok,
        "each bound has lambda != 1, lambda^d = 1 and value k - 2",
    ));
}

fn resonance_checks(
    lattice: &Lattice,
    components: &[arrangement_core::oscohom::ResonanceComponent],
    checks: &mut Vec<Check>,
) {
    let os = Os2::new(lattice);
    let isotropic = components.iter().all(|c| c.is_isotropic(&os));
    checks.push(Check::new(
        "resonance.isotropic",
        isotropic,
        format!("{} component(s) checked for vanishing cup products", components.len()),
    ));

    let mut dims_ok = true;
    let mut member_ok = true;
    for c in components {
        let expected = match &c.provenance {
            Provenance::Local { lines, .. } => lines.len() - 1,
            Provenance::Multinet { classes, .. } => classes.len() - 1,
        };
        dims_ok &= c.dimension == expected && c.span.len() == expected;
        // A generic point of the component has Aomoto h1 = dim - 1.
        let generic = c
            .span
            .iter()
            .enumerate()
            .fold(H1Vector::zero(lattice.d()), |acc, (i, v)| {
                acc.add(&v.scale(&Cyclo::from_int(1, (i * i + 2 * i + 3) as i64)))
            });
        member_ok &= os.aomoto_h1(&generic).is_ok_and(|h| h >= c.dimension - 1 && h >= 1);
    }
    checks.push(Check::new(
        "resonance.dimensions",
        dims_ok,
        "local components have dim m - 1, multinet components dim k - 1",
    ));
    checks.push(Check::new(
        "resonance.membership",
        member_ok,
        "a generic point of every component has Aomoto h1 >= dim - 1 >= 1",
    ));
}

fn certificate_records(
    section: &MultinetSection,
    d: usize,
    checks: &mut Vec<Check>,
) -> Vec<CertificateRecord> {
    let mut records = Vec::new();
    let mut premises_ok = true;
    for (i, m) in section.multinets.iter().enumerate() {
        let outcome = match &m.pencil {
            None => CertificateOutcome::NotIssued {
                reason: format!(
                    "no pencil: {}",
                    m.pencil_error.as_deref().unwrap_or("unrealized")
                ),
            },
            Some(pencil) => match nontriviality_certificate(&m.structure, pencil, &m.bounds, d) {
                Ok(certificate) => {
                    let nontrivial = certificate.conclusion == Conclusion::NontrivialMonodromy;
                    premises_ok &= nontrivial
                        == (certificate.reduced
                            && certificate.full_support
                            && certificate.span_dim == 2);
                    premises_ok &= certificate.bounds == m.bounds;
                    CertificateOutcome::Issued { certificate }
                }
                Err(e) => CertificateOutcome::NotIssued {
                    reason: e.to_string(),
                },
            },
        };
        records.push(CertificateRecord {
            multinet: i,
            outcome,
        });
    }
    checks.push(Check::new(
        "certificates.premises",
        premises_ok,
        "every NontrivialMonodromy conclusion rests on a reduced, full-support multinet with a 2-dimensional pencil",
    ));
    records
}

fn collected_bounds(section: Option<&MultinetSection>) -> Vec<BoundEntry> {
    let mut best: BTreeMap<RootOfUnity, (usize, usize)> = BTreeMap::new();
    for (i, m) in section.into_iter().flat_map(|s| s.multinets.iter().enumerate()) {
        for b in &m.bounds {
            let slot = best.entry(b.lambda).or_insert((b.bound, i));
            if b.bound > slot.0 {
                *slot = (b.bound, i);
            }
        }
    }
    best.into_iter()
        .map(|(lambda, (bound, multinet))| BoundEntry {
            lambda,
            bound,
            multinet,
            exact: None,
        })
        .collect()
}

fn eigen_section(
    arr: &Arrangement,
    opts: &Options,
    multinets: Option<&MultinetSection>,
    certificates: Option<&[CertificateRecord]>,
    checks: &mut Vec<Check>,
) -> Result<EigenSection> {
    let d = arr.d();
    let mut bounds = collected_bounds(multinets);
    let infinity_line = opts.infinity_line.unwrap_or(d - 1);

    let (pres, source, infinity, wiring) = if let Some(p) = &opts.presentation {
        (p.clone(), "presentation", None, None)
    } else {
        match wiring_diagram(arr, infinity_line, 0) {
            Ok(wd) => {
                let summary = wd.summary();
                (randell_presentation(&wd), "wiring", Some(infinity_line), Some(summary))
            }
            Err(err @ WiringError::NotReal { .. }) => {
                warn!("{err}; eigenspaces reported as bounds only (pass --presentation for an exact computation)");
                return Ok(EigenSection {
                    status: EigenStatus::BoundsOnly,
                    source: None,
                    note: Some(format!("bounds only (non-real): {err}")),
                    infinity_line: None,
                    wiring: None,
                    report: None,
                    cover: None,
                    bounds,
                    pullback_checks: Vec::new(),
                });
            }
            Err(e) => return Err(e.into()),
        }
    };

    let ab = pres.abelianization();
    checks.push(Check::new(
        "presentation.abelianization",
        ab.free_rank == d - 1 && ab.torsion.is_empty() && pres.word_count_check(),
        format!(
            "H1 has free rank {} (expected {}) and {} torsion coefficient(s)",
            ab.free_rank,
            d - 1,
            ab.torsion.len()
        ),
    ));

    info!("computing eigenspaces from the {source} presentation");
    let report = milnor_eigenspaces_from_presentation(&pres)?;

    checks.push(Check::new(
        "eigenspaces.unit",
        report.weight2_dim == d - 1,
        format!("dim H1(F)_1 = {} (expected d - 1 = {})", report.weight2_dim, d - 1),
    ));

    let mut galois_ok = true;
    for entry in &report.entries {
        for j in 1..entry.order.max(2) {
            let lambda = RootOfUnity::new(entry.order, j as i64);
            if lambda.order() == entry.order {
                galois_ok &= eigenspace_dim(&pres, lambda)? == entry.dim;
            }
        }
    }
    checks.push(Check::new(
        "eigenspaces.galois",
        galois_ok,
        "Galois-conjugate eigenvalues have equal eigenspace dimensions",
    ));

    info!("computing the {d}-fold cyclic cover");
    let cover = cover_monodromy(&pres, &total_degree_epi(&pres), d as u32, &opts.characters)?;
    let cover_ok = cover.b1 == report.b1_f
        && report.entries.iter().all(|e| {
            cover
                .character_dims
                .iter()
                .find(|c| c.order == e.order)
                .map_or(e.dim == 0, |c| c.per_root == e.dim)
        });
    checks.push(Check::new(
        "eigenspaces.cover_agreement",
        cover_ok,
        format!("b1 of the cover = {}, b1(F) from characters = {}", cover.b1, report.b1_f),
    ));

    let mut bounds_ok = true;
    for b in &mut bounds {
        let exact = report.dim_at(b.lambda);
        bounds_ok &= b.bound <= exact;
        b.exact = Some(exact);
    }
    checks.push(Check::new(
        "eigenspaces.bounds_respected",
        bounds_ok,
        format!("{} lower bound(s) compared with exact dimensions", bounds.len()),
    ));

    let certified = certificates.into_iter().flatten().any(|r| {
        matches!(&r.outcome, CertificateOutcome::Issued { certificate }
            if certificate.conclusion == Conclusion::NontrivialMonodromy)
    });
    if certified {
        checks.push(Check::new(
            "eigenspaces.certificate_agreement",
            !report.monodromy_trivial(),
            format!("certified nontrivial; weight-1 dimension {}", report.weight1_dim),
        ));
    }

    if !cover.pullback_checks.is_empty() {
        let failed = cover.pullback_checks.iter().filter(|c| !c.holds).count();
        checks.push(Check::new(
            "eigenspaces.pullback",
            failed == 0,
            format!(
                "{} character(s) checked, {failed} failure(s)",
                cover.pullback_checks.len()
            ),
        ));
    }

    Ok(EigenSection {
        status: EigenStatus::Exact,
        source: Some(source),
        note: None,
        infinity_line: infinity,
        wiring,
        cover: Some(CoverSummary {
            index: cover.index,
            b1: cover.b1,
            torsion: cover.torsion.iter().map(|t| t.to_string()).collect(),
            character_dims: cover.character_dims,
            trivial: cover.trivial,
        }),
        report: Some(report),
        bounds,
        pullback_checks: cover.pullback_checks,
    })
}
