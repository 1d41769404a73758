//! Named suites of checks over the bounded corpora.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use crate::bits;
use crate::corpus::{enumerate_spaces, enumerate_spaces_up_to, recount_classes, recount_topologies, Corpus};
use crate::error::{Error, Result};
use crate::filters::{FilterKind, LiftCache};
use crate::frame::{self, distributive_lattices, FiniteFrame, FrameMap, IdealFrame};
use crate::io::space_to_json;
use crate::lab::*;
use crate::lattice_checks::*;
use crate::map::{enumerate_continuous_maps, for_each_continuous, are_homeomorphic, ContinuousMap};
use crate::reflect::{factor_through, hausdorff_reflect, patch_coreflect, patch_couniversality, sobrify, t0_reflect, ReflectorKind};
use crate::space::FiniteSpace;

/// Every registered suite, in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "corpus",
    "salbany-example",
    "finite-scale",
    "monad-laws",
    "prop3.4",
    "prop3.6",
    "prop3.7",
    "lemma4.5",
    "thm4.6",
    "lemma4.8",
    "prop4.9",
    "prop4.10",
    "thm4.11",
    "prop5.2",
    "prop5.4",
    "prop5.7",
    "cech-stone",
    "lemma2.6",
    "sobriety",
    "reflectors",
    "ideal-comonad",
    "lemma5.8",
    "prop5.9",
];

/// Deliberate defects used to confirm that the checks can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// `Σ`'s multiplication exchanges the images of two points.
    SigmaMultSwap,
    /// The T0 reflector collapses every space to a point.
    T0Coarse,
    /// Composite multiplications become constant.
    MultCollapse,
    /// The ideal counit `σ` becomes the constant top map.
    IdealCounit,
}

impl Fault {
    pub const ALL: [Fault; 4] = [Fault::SigmaMultSwap, Fault::T0Coarse, Fault::MultCollapse, Fault::IdealCounit];

    pub fn name(self) -> &'static str {
        match self {
            Fault::SigmaMultSwap => "sigma-mult-swap",
            Fault::T0Coarse => "t0-coarse",
            Fault::MultCollapse => "mult-collapse",
            Fault::IdealCounit => "ideal-counit",
        }
    }

    /// Suites in which the fault is expected to surface.
    pub fn target_suites(self) -> &'static [&'static str] {
        match self {
            Fault::SigmaMultSwap => &["monad-laws"],
            Fault::T0Coarse => &["reflectors"],
            Fault::MultCollapse => &["lemma4.8", "prop4.10"],
            Fault::IdealCounit => &["ideal-comonad"],
        }
    }
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fault {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fault::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFault(s.to_string()))
    }
}

/// Corpus bounds and fault selection for a suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_points: usize,
    pub map_points: usize,
    pub epi_cap: usize,
    pub target_points: usize,
    pub lattice_cap: usize,
    pub mono_lattice_cap: usize,
    pub up_to_homeo: bool,
    pub fault: Option<Fault>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_points: 4,
            map_points: 3,
            epi_cap: 5,
            target_points: 4,
            lattice_cap: 8,
            mono_lattice_cap: 6,
            up_to_homeo: true,
            fault: None,
        }
    }
}

impl SuiteConfig {
    fn validate(&self) -> Result<()> {
        if self.max_points == 0 || self.map_points == 0 || self.target_points == 0 {
            return Err(Error::InvalidInput("corpus bounds must be positive".into()));
        }
        if self.epi_cap < self.max_points {
            return Err(Error::InvalidInput(format!(
                "epi cap {} is below the corpus size {}",
                self.epi_cap, self.max_points
            )));
        }
        for (what, n) in [
            ("max points", self.max_points),
            ("map points", self.map_points),
            ("epi cap", self.epi_cap),
            ("target points", self.target_points),
        ] {
            if n > crate::corpus::MAX_CORPUS_POINTS {
                return Err(Error::BoundExceeded(format!("{what} {n} (max {})", crate::corpus::MAX_CORPUS_POINTS)));
            }
        }
        if self.lattice_cap > 10 || self.mono_lattice_cap > 8 {
            return Err(Error::BoundExceeded("lattice caps are limited to 10 and 8".into()));
        }
        Ok(())
    }
}

/// Shared state for one run: corpora, caches and the faulted components.
struct Bench {
    config: SuiteConfig,
    cache: Arc<LiftCache>,
    corpus: Corpus,
    small: OnceLock<Corpus>,
    tests: OnceLock<Vec<FiniteSpace>>,
    targets: OnceLock<Vec<FiniteSpace>>,
    lattices: OnceLock<Vec<FiniteFrame>>,
    reflectors: Vec<Reflector>,
}

impl Bench {
    fn new(config: &SuiteConfig) -> Result<Self> {
        config.validate()?;
        let corpus = Corpus::build(config.max_points, config.map_points, config.up_to_homeo)?;
        let reflectors = ReflectorKind::ALL
            .into_iter()
            .map(|k| {
                if k == ReflectorKind::T0 && config.fault == Some(Fault::T0Coarse) {
                    Reflector::coarsened(k)
                } else {
                    Reflector::standard(k)
                }
            })
            .collect();
        Ok(Bench {
            config: config.clone(),
            cache: Arc::new(LiftCache::new()),
            corpus,
            small: OnceLock::new(),
            tests: OnceLock::new(),
            targets: OnceLock::new(),
            lattices: OnceLock::new(),
            reflectors,
        })
    }

    fn descriptor(&self) -> &str {
        self.corpus.descriptor()
    }

    /// The corpus cut down to the map bound, for the costlier searches.
    fn small(&self) -> &Corpus {
        self.small.get_or_init(|| self.corpus.restrict(self.config.map_points))
    }

    /// Test objects for epi and mono decisions.
    fn tests(&self) -> &[FiniteSpace] {
        self.tests
            .get_or_init(|| enumerate_spaces_up_to(self.config.epi_cap, true).expect("validated bound"))
    }

    /// Codomains for uniqueness searches.
    fn targets(&self) -> &[FiniteSpace] {
        self.targets
            .get_or_init(|| enumerate_spaces_up_to(self.config.target_points, true).expect("validated bound"))
    }

    fn lattices(&self) -> &[FiniteFrame] {
        self.lattices
            .get_or_init(|| distributive_lattices(self.config.lattice_cap).expect("validated bound"))
    }

    fn lattices_up_to(&self, k: usize) -> Vec<FiniteFrame> {
        self.lattices().iter().filter(|l| l.len() <= k).cloned().collect()
    }

    fn reflector(&self, kind: ReflectorKind) -> &Reflector {
        &self.reflectors[ReflectorKind::ALL.iter().position(|&k| k == kind).expect("registered")]
    }

    fn monad(&self, kind: FilterKind) -> MonadSpec {
        let m = filter_monad(kind, &self.cache);
        if kind == FilterKind::OpenPrime && self.config.fault == Some(Fault::SigmaMultSwap) {
            swap_mult(&m)
        } else {
            m
        }
    }

    fn compose(&self, r: ReflectorKind, t: &MonadSpec) -> MonadSpec {
        let m = compose_reflector_monad(self.reflector(r), t);
        if self.config.fault == Some(Fault::MultCollapse) {
            collapse_mult(&m)
        } else {
            m
        }
    }

    fn alpha(&self, target: FilterKind) -> NatTrans {
        alpha_transformation(target, &self.cache)
    }

    fn counit(&self) -> Box<Counit> {
        if self.config.fault == Some(Fault::IdealCounit) {
            Box::new(|il: &IdealFrame| {
                let top = il.base.top();
                FrameMap::new_unchecked(il.frame.clone(), il.base.clone(), vec![top; il.frame.len()])
            })
        } else {
            Box::new(frame::sigma)
        }
    }
}

fn report(id: &str, corpus: &str, verdict: Verdict) -> CheckReport {
    CheckReport::from_verdict(id, corpus, verdict)
}

fn sj(x: &FiniteSpace) -> String {
    space_to_json(x)
}

fn each(spaces: &[FiniteSpace], check: impl Fn(&FiniteSpace) -> Verdict + Sync) -> Verdict {
    first_failure(spaces, check)
}

fn ensure(ok: bool, witness: impl FnOnce() -> String) -> Verdict {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

/// Runs a registered suite, or every suite for `all`.
pub fn run_suite(id: &str, config: &SuiteConfig) -> Result<Vec<CheckReport>> {
    if id != "all" && !SUITES.contains(&id) {
        return Err(Error::UnknownSuite(id.to_string()));
    }
    let bench = Bench::new(config)?;
    let ids: Vec<&str> = if id == "all" { SUITES.to_vec() } else { vec![id] };
    let mut out = Vec::new();
    for suite in ids {
        let reports = match suite {
            "corpus" => corpus_suite(&bench),
            "salbany-example" => salbany_example(&bench),
            "finite-scale" => finite_scale(&bench),
            "monad-laws" => monad_laws(&bench),
            "prop3.4" => prop3_4(&bench),
            "prop3.6" => prop3_6(&bench),
            "prop3.7" => prop3_7(&bench),
            "lemma4.5" => lemma4_5(&bench),
            "thm4.6" => thm4_6(&bench),
            "lemma4.8" => lemma4_8(&bench),
            "prop4.9" => prop4_9(&bench),
            "prop4.10" => prop4_10(&bench),
            "thm4.11" => thm4_11(&bench),
            "prop5.2" => prop5_2(&bench),
            "prop5.4" => prop5_4(&bench),
            "prop5.7" => prop5_7(&bench),
            "cech-stone" => cech_stone(&bench),
            "lemma2.6" => lemma2_6(&bench),
            "sobriety" => sobriety(&bench),
            "reflectors" => reflectors(&bench),
            "ideal-comonad" => ideal_comonad(&bench),
            "lemma5.8" => lemma5_8(&bench),
            "prop5.9" => prop5_9(&bench),
            _ => unreachable!("suite ids are checked above"),
        };
        out.extend(reports.into_iter().map(|r| {
            let id = format!("{suite}/{}", r.id);
            r.with_id(id)
        }));
    }
    Ok(out)
}

fn corpus_suite(b: &Bench) -> Vec<CheckReport> {
    let n_max = b.config.max_points.min(crate::corpus::MAX_RECOUNT_POINTS);
    let desc = format!("n=1..{n_max}");
    let labeled = (1..=n_max).try_for_each(|n| {
        let fast = enumerate_spaces(n, false).map_err(err)?;
        let slow = recount_topologies(n).map_err(err)?;
        let mut fast_opens: Vec<Vec<u64>> = fast.iter().map(|x| x.opens().to_vec()).collect();
        let mut slow_opens = slow;
        fast_opens.sort();
        slow_opens.sort();
        ensure(fast_opens == slow_opens, || {
            format!("n={n}: {} topologies enumerated, {} by set families", fast_opens.len(), slow_opens.len())
        })
    });
    let classes = (1..=n_max).try_for_each(|n| {
        let fast = enumerate_spaces(n, true).map_err(err)?.len();
        let slow = recount_classes(n).map_err(err)?;
        ensure(fast == slow, || format!("n={n}: {fast} classes enumerated, {slow} by canonical forms"))
    });
    let ordered = (1..=b.config.max_points).try_for_each(|n| {
        let spaces = enumerate_spaces(n, false).map_err(err)?;
        ensure(spaces.windows(2).all(|w| w[0] < w[1]), || format!("n={n}: enumeration not strictly ascending"))
    });
    let maps = each(b.corpus.spaces(), |x| {
        let ok = b
            .corpus
            .maps()
            .iter()
            .filter(|f| f.dom() == x)
            .all(|f| ContinuousMap::new(f.dom().clone(), f.cod().clone(), f.values().to_vec()).is_ok());
        ensure(ok, || format!("a corpus map from {} is not continuous", sj(x)))
    });
    vec![
        report("labeled-counts", &desc, labeled),
        report("homeomorphism-classes", &desc, classes),
        report("canonical-order", b.descriptor(), ordered),
        report("maps-continuous", b.descriptor(), maps),
    ]
}

fn e1() -> FiniteSpace {
    FiniteSpace::from_generators(3, &[0b001]).expect("E1")
}

fn salbany_example(_: &Bench) -> Vec<CheckReport> {
    let x = e1();
    let c = x.classify();
    let desc = sj(&x);
    vec![
        report("stable", &desc, ensure(c.is_stable, || "not stable".into())),
        report("locally-compact", &desc, ensure(c.is_locally_compact, || "not locally compact".into())),
        report("weakly-sober", &desc, ensure(c.is_weakly_sober, || "not weakly sober".into())),
        report("not-t0", &desc, ensure(!c.is_t0, || "classified as T0".into())),
        report("not-sober", &desc, ensure(!c.is_sober, || "classified as sober".into())),
        report(
            "irreducible-closeds",
            &desc,
            ensure(c.irreducible_closed_sets == vec![0b110, 0b111], || {
                format!("irreducible closed sets {:?}", crate::io::mask_lists(&c.irreducible_closed_sets))
            }),
        ),
    ]
}

fn finite_scale(b: &Bench) -> Vec<CheckReport> {
    let proper = first_failure(b.corpus.maps(), |f| {
        ensure(f.is_proper(), || format!("map {:?} on {} is not proper", f.values(), sj(f.dom())))
    });
    let ultra = b.monad(FilterKind::Ultra);
    let ultra_trivial = each(b.corpus.spaces(), |x| {
        let eta = ultra.unit.at(x).map_err(err)?;
        ensure(eta.is_homeomorphism(), || format!("𝔘X is not X at X={}", sj(x)))
    });
    let sober_is_t0 = each(b.corpus.spaces(), sobrify_matches_t0);
    let compact = each(b.corpus.spaces(), |x| {
        ensure(bits::submasks(x.full()).all(|a| x.is_compact(a)), || format!("non-compact subset in {}", sj(x)))
    });
    let way_below = each(b.corpus.spaces(), |x| {
        for &o in x.opens() {
            for &u in x.opens() {
                if x.way_below_open(o, u).map_err(err)? != x.way_below_open_shortcut(o, u).map_err(err)? {
                    return Err(format!("≪ shortcut differs at {o:#b}, {u:#b} in {}", sj(x)));
                }
            }
        }
        Ok(())
    });
    let t0 = b.reflector(ReflectorKind::T0);
    let reta = check_reta_epi(t0, &ultra, b.small(), b.tests()).with_id("reta-epi-finite");
    vec![
        report("proper-constant", b.descriptor(), proper),
        report("ultra-is-identity", b.descriptor(), ultra_trivial),
        report("sobrify-is-t0", b.descriptor(), sober_is_t0),
        report("compact-constant", b.descriptor(), compact),
        report("way-below-shortcut", b.descriptor(), way_below),
        reta,
        check_way_below_degenerates(&b.lattices_up_to(6)),
    ]
}

fn sobrify_matches_t0(x: &FiniteSpace) -> Verdict {
    let s = sobrify(x);
    let t = t0_reflect(x);
    let phi = factor_through(&s.unit, &t.unit).map_err(err)?;
    ensure(phi.is_homeomorphism(), || format!("sobrification and T0 quotient differ at X={}", sj(x)))
}

fn monad_laws(b: &Bench) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for kind in FilterKind::ALL {
        let m = b.monad(kind);
        out.push(check_monad_laws(&m, &b.corpus).with_id(format!("laws/{}", m.name)));
        out.push(check_functor_laws(&m.functor, &b.corpus).with_id(format!("functor/{}", m.name)));
        out.push(check_naturality(&m.unit, &b.corpus).with_id(format!("unit-natural/{}", m.name)));
        out.push(check_naturality(&m.mult, &b.corpus).with_id(format!("mult-natural/{}", m.name)));
    }
    let id = identity_monad();
    out.push(check_monad_laws(&id, &b.corpus).with_id("laws/id"));
    out
}

fn prop3_4(b: &Bench) -> Vec<CheckReport> {
    let ultra = b.monad(FilterKind::Ultra);
    let mut out = Vec::new();
    for target in [FilterKind::OpenPrime, FilterKind::ClosedPrime] {
        let m = b.monad(target);
        let a = b.alpha(target);
        out.push(check_monad_morphism(&a, &ultra, &m, &b.corpus).with_id(format!("alpha/{}", m.name)));
    }
    let sigma = b.monad(FilterKind::OpenPrime);
    out.push(
        check_monad_morphism(&NatTrans::identity(&sigma.functor), &sigma, &sigma, &b.corpus).with_id("identity/sigma"),
    );
    out
}

/// `λ : R𝔘 → M` induced by `α : 𝔘 → M`.
fn separation_from_ultra(b: &Bench, r: ReflectorKind, target: &MonadSpec, gamma: &NatTrans) -> (MonadSpec, Result<(NatTrans, CheckReport)>) {
    let ultra = b.monad(FilterKind::Ultra);
    let composite = b.compose(r, &ultra);
    let result = universal_separation(gamma, b.reflector(r), &composite, &ultra, target, &b.corpus);
    (composite, result)
}

fn prop3_6(b: &Bench) -> Vec<CheckReport> {
    let sigma = b.monad(FilterKind::OpenPrime);
    let ultra = b.monad(FilterKind::Ultra);
    let t0 = b.reflector(ReflectorKind::T0);
    let (composite, result) = separation_from_ultra(b, ReflectorKind::T0, &sigma, &b.alpha(FilterKind::OpenPrime));
    let mut out = vec![
        check_monad_laws(&composite, &b.corpus).with_id("composite-laws"),
        check_interchange(&t0.unit(), &ultra.unit, &b.corpus).with_id("unit-interchange"),
    ];
    match result {
        Ok((lambda, rep)) => {
            out.push(rep.with_id("lambda-factorization"));
            out.push(check_natural_homeomorphism(&lambda, &b.corpus).with_id("natural-homeomorphism"));
            out.push(check_monad_morphism(&lambda, &composite, &sigma, &b.corpus).with_id("mult-matches-sigma"));
        }
        Err(e) => out.push(report("lambda-factorization", b.descriptor(), Err(err(e)))),
    }
    out
}

fn prop3_7(b: &Bench) -> Vec<CheckReport> {
    let t0 = b.reflector(ReflectorKind::T0);
    let verdict = each(b.corpus.spaces(), |x| {
        let refl = t0.reflection(x);
        let r = &refl.unit;
        for &o in x.opens() {
            ensure(r.preimage(r.image(o)) == o, || format!("r⁻¹(r(O)) ≠ O for O={o:#b} in {}", sj(x)))?;
        }
        for &u in refl.space.opens() {
            ensure(r.image(r.preimage(u)) == u, || format!("r(r⁻¹(U)) ≠ U for U={u:#b} over {}", sj(x)))?;
        }
        ensure(frame::opens_map(r).is_isomorphism(), || format!("r⁻¹ is not a lattice isomorphism at {}", sj(x)))
    });
    vec![report("open-lattice-isomorphism", b.descriptor(), verdict)]
}

fn lemma4_5(b: &Bench) -> Vec<CheckReport> {
    let pairs = [
        (ReflectorKind::T0, FilterKind::OpenPrime),
        (ReflectorKind::T0, FilterKind::Ultra),
        (ReflectorKind::Sober, FilterKind::ClosedPrime),
        (ReflectorKind::Hausdorff, FilterKind::Ultra),
    ];
    pairs
        .into_iter()
        .map(|(r, t)| {
            let t = b.monad(t);
            check_reta_epi(b.reflector(r), &t, b.small(), b.tests()).with_id(format!("{}/{}", r.name(), t.name))
        })
        .collect()
}

fn thm4_6(b: &Bench) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for r in ReflectorKind::ALL {
        let rr = b.reflector(r);
        for kind in FilterKind::ALL {
            let t = b.monad(kind);
            let composite = b.compose(r, &t);
            let tag = format!("{}/{}", r.name(), t.name);
            let structure = each(b.corpus.spaces(), |x| lifted_structure_lawful(rr, &t, x));
            out.push(report(&format!("structure-map/{tag}"), b.descriptor(), structure));
            out.push(check_monad_laws(&composite, &b.corpus).with_id(format!("composite-laws/{tag}")));
            let rt = NatTrans::whisker_right(&rr.unit(), &t.functor);
            out.push(check_monad_morphism(&rt, &t, &composite, &b.corpus).with_id(format!("rT-morphism/{tag}")));
            out.push(check_interchange(&rr.unit(), &t.unit, &b.corpus).with_id(format!("unit-interchange/{tag}")));
        }
        let id = identity_monad();
        let composite = b.compose(r, &id);
        out.push(check_monad_laws(&composite, &b.corpus).with_id(format!("composite-laws/{}/id", r.name())));
    }
    let sigma = b.monad(FilterKind::OpenPrime);
    let splitting = each(b.small().spaces(), |x| {
        let sx = sigma.functor.object(x).map_err(err)?;
        let ultra = b.monad(FilterKind::Ultra);
        let eta = ultra.unit.at(&sx).map_err(err)?;
        ensure(find_splitting(&eta).is_some(), || format!("η at ΣX does not split for X={}", sj(x)))
    });
    out.push(report("splitting/sigma-in-ultra", b.small().descriptor(), splitting));
    out
}

/// The lifted structure `b` on `RTX` is a `T`-algebra and `r_{TX}` is a
/// homomorphism from the free algebra.
fn lifted_structure_lawful(r: &Reflector, t: &MonadSpec, x: &FiniteSpace) -> Verdict {
    let y = t.functor.object(x).map_err(err)?;
    let a = t.mult.at(x).map_err(err)?;
    let bmap = lift_algebra(r, t, &y, &a).map_err(err)?;
    let ry = r.reflection(&y);
    let at = || format!("X={}", sj(x));
    let unit_law = t.unit.at(&ry.space).map_err(err)?.then(&bmap).map_err(err)?;
    ensure(unit_law == ContinuousMap::identity(&ry.space), || format!("b∘η ≠ 1 at {}", at()))?;
    let tb = t.functor.morphism(&bmap).map_err(err)?.then(&bmap).map_err(err)?;
    let mb = t.mult.at(&ry.space).map_err(err)?.then(&bmap).map_err(err)?;
    ensure(tb == mb, || format!("b∘Tb ≠ b∘μ at {}", at()))?;
    let lhs = t.functor.morphism(&ry.unit).map_err(err)?.then(&bmap).map_err(err)?;
    let rhs = a.then(&ry.unit).map_err(err)?;
    ensure(lhs == rhs, || format!("r is not a T-homomorphism at {}", at()))
}

fn lemma4_8(b: &Bench) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let ultra = b.monad(FilterKind::Ultra);
    let sigma = b.monad(FilterKind::OpenPrime);
    for (r, t) in [(ReflectorKind::T0, &ultra), (ReflectorKind::T0, &sigma), (ReflectorKind::Hausdorff, &ultra)] {
        let composite = b.compose(r, t);
        out.push(check_idempotent(&composite, &b.corpus).with_id(format!("idempotent/{}", composite.name)));
        let rr = b.reflector(r);
        let fixed = each(b.corpus.spaces(), |x| {
            let rtx = composite.functor.object(x).map_err(err)?;
            ensure(rr.reflection(&rtx).unit.is_homeomorphism(), || format!("RTX is not fixed by R at X={}", sj(x)))
        });
        out.push(report(&format!("free-algebra-fixed/{}", composite.name), b.descriptor(), fixed));
    }
    for kind in FilterKind::ALL {
        let m = b.monad(kind);
        out.push(check_idempotent(&m, &b.corpus).with_id(format!("idempotent/{}", m.name)));
    }
    let t0 = b.reflector(ReflectorKind::T0);
    for kind in [FilterKind::OpenPrime, FilterKind::ClosedPrime] {
        let m = b.monad(kind);
        let fixed = each(b.corpus.spaces(), |x| {
            let mx = m.functor.object(x).map_err(err)?;
            ensure(t0.reflection(&mx).unit.is_homeomorphism(), || format!("{}X is not T0 at X={}", m.name, sj(x)))
        });
        out.push(report(&format!("t0-fixed/{}", m.name), b.descriptor(), fixed));
    }
    out
}

fn prop4_9(b: &Bench) -> Vec<CheckReport> {
    let ultra = b.monad(FilterKind::Ultra);
    let sigma = b.monad(FilterKind::OpenPrime);
    let mut out = Vec::new();
    for t in [&ultra, &sigma] {
        let rt = b.compose(ReflectorKind::T0, t);
        let class: Vec<FiniteSpace> = b.small().spaces().iter().filter(|x| x.is_t0()).cloned().collect();
        let verdict = each(&class, |x| {
            let u = rt.unit.at(x).map_err(err)?;
            let wx = rt.mult.at(x).map_err(err)?;
            for y in &class {
                let rty = rt.functor.object(y).map_err(err)?;
                let wy = rt.mult.at(y).map_err(err)?;
                let mut homs = Vec::new();
                for phi in enumerate_continuous_maps(u.cod(), &rty) {
                    let lhs = wx.then(&phi).map_err(err)?;
                    let rhs = rt.functor.morphism(&phi).map_err(err)?.then(&wy).map_err(err)?;
                    if lhs == rhs {
                        homs.push(phi);
                    }
                }
                for f in enumerate_continuous_maps(x, &rty) {
                    let count = homs.iter().filter(|phi| u.then(phi).map(|g| g == f).unwrap_or(false)).count();
                    if count != 1 {
                        return Err(format!(
                            "{count} algebra maps extend {:?} from X={} to RT{}",
                            f.values(),
                            sj(x),
                            sj(y)
                        ));
                    }
                }
            }
            Ok(())
        });
        out.push(report(&format!("free-algebra-reflection/{}", rt.name), b.small().descriptor(), verdict));
    }
    out
}

fn prop4_10(b: &Bench) -> Vec<CheckReport> {
    let ultra = b.monad(FilterKind::Ultra);
    let composite = b.compose(ReflectorKind::T0, &ultra);
    let mut out = vec![
        check_idempotent(&composite, &b.corpus).with_id(format!("precondition/{}", composite.name)),
        fakir_test(&composite, b.small(), b.tests()).with_id(format!("fakir/{}", composite.name)),
        fakir_test(&identity_monad(), b.small(), b.tests()).with_id("fakir/id"),
    ];
    for kind in FilterKind::ALL {
        let m = b.monad(kind);
        out.push(fakir_test(&m, b.small(), b.tests()).with_id(format!("fakir/{}", m.name)));
    }
    out
}

fn thm4_11(b: &Bench) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for target in [FilterKind::OpenPrime, FilterKind::ClosedPrime] {
        let m = b.monad(target);
        let (_, result) = separation_from_ultra(b, ReflectorKind::T0, &m, &b.alpha(target));
        out.push(match result {
            Ok((_, rep)) => rep.with_id(format!("lambda/t0/{}", m.name)),
            Err(e) => report(&format!("lambda/t0/{}", m.name), b.descriptor(), Err(err(e))),
        });
    }
    // 𝔘X ≅ X is rarely Hausdorff, so the identity on 𝔘 must be refused.
    let ultra = b.monad(FilterKind::Ultra);
    let composite = b.compose(ReflectorKind::Hausdorff, &ultra);
    let refused = match universal_separation(
        &NatTrans::identity(&ultra.functor),
        b.reflector(ReflectorKind::Hausdorff),
        &composite,
        &ultra,
        &ultra,
        &b.corpus,
    ) {
        Err(Error::HypothesisViolated(_)) => Ok(()),
        Err(e) => Err(format!("unexpected error {e}")),
        Ok(_) => Err("hypothesis violation not detected".into()),
    };
    out.push(report("hypothesis-checked", b.descriptor(), refused));
    let epis = first_failure(b.corpus.maps(), |f| {
        if !f.is_surjective() {
            return Ok(());
        }
        for kind in FilterKind::ALL {
            let tf = b.monad(kind).functor.morphism(f).map_err(err)?;
            ensure(tf.is_surjective(), || format!("{kind} does not preserve the surjection {:?}", f.values()))?;
        }
        Ok(())
    });
    out.push(report("preserves-surjections", b.descriptor(), epis));
    out
}

fn prop5_2(b: &Bench) -> Vec<CheckReport> {
    let sigma = b.monad(FilterKind::OpenPrime);
    let targets: Vec<FiniteSpace> = b.targets().iter().filter(|y| y.is_stably_compact()).cloned().collect();
    let universal = each(b.corpus.spaces(), |x| {
        let e = sigma.unit.at(x).map_err(err)?;
        for y in &targets {
            let mut counts = std::collections::HashMap::<Vec<usize>, usize>::new();
            for_each_continuous(e.cod(), y, &vec![None; e.cod().len()], |phi| {
                let composite: Vec<usize> = e.values().iter().map(|&p| phi[p]).collect();
                *counts.entry(composite).or_default() += 1;
                true
            });
            for f in enumerate_continuous_maps(x, y) {
                let count = counts.get(f.values()).copied().unwrap_or(0);
                ensure(count == 1, || {
                    format!("{count} maps φ with φ∘e = {:?} from X={} to {}", f.values(), sj(x), sj(y))
                })?;
            }
        }
        Ok(())
    });
    let embedding = each(b.corpus.spaces(), |x| {
        let e = sigma.unit.at(x).map_err(err)?;
        ensure(e.is_embedding() == x.is_t0(), || format!("e is an embedding iff T0 fails at X={}", sj(x)))
    });
    let compact = each(b.corpus.spaces(), |x| {
        let sx = sigma.functor.object(x).map_err(err)?;
        ensure(sx.is_stably_compact(), || format!("ΣX not stably compact at X={}", sj(x)))
    });
    let desc = format!("{}; stably compact targets {}", b.descriptor(), targets.len());
    vec![
        report("universal-property", &desc, universal),
        report("embedding-iff-t0", b.descriptor(), embedding),
        report("stably-compact", b.descriptor(), compact),
    ]
}

fn prop5_4(b: &Bench) -> Vec<CheckReport> {
    let pcf = b.monad(FilterKind::ClosedPrime);
    let (composite, result) = separation_from_ultra(b, ReflectorKind::T0, &pcf, &b.alpha(FilterKind::ClosedPrime));
    match result {
        Ok((lambda, rep)) => {
            let sigma = b.monad(FilterKind::OpenPrime);
            let iso = each(b.corpus.spaces(), |x| {
                let sx = sigma.functor.object(x).map_err(err)?;
                let px = pcf.functor.object(x).map_err(err)?;
                ensure(are_homeomorphic(&sx, &px), || format!("ΣX and 𝔓X differ at X={}", sj(x)))
            });
            vec![
                rep.with_id("lambda-factorization"),
                check_natural_homeomorphism(&lambda, &b.corpus).with_id("natural-homeomorphism"),
                check_monad_laws(&composite, &b.corpus).with_id("composite-laws"),
                report("sigma-pcf-homeomorphic", b.descriptor(), iso),
            ]
        }
        Err(e) => vec![report("lambda-factorization", b.descriptor(), Err(err(e)))],
    }
}

fn components_match(x: &FiniteSpace, unit: &ContinuousMap) -> Verdict {
    let h = hausdorff_reflect(x);
    let phi = factor_through(unit, &h.unit).map_err(err)?;
    ensure(phi.is_homeomorphism() && unit.cod().is_hausdorff(), || {
        format!("value at X={} is not the discrete space of components", sj(x))
    })
}

fn prop5_7(b: &Bench) -> Vec<CheckReport> {
    let ultra = b.monad(FilterKind::Ultra);
    let composite = b.compose(ReflectorKind::Hausdorff, &ultra);
    let components = each(b.corpus.spaces(), |x| components_match(x, &composite.unit.at(x).map_err(err)?));
    let h = b.reflector(ReflectorKind::Hausdorff);
    let discrete: Vec<FiniteSpace> = b.targets().iter().filter(|z| z.is_hausdorff()).cloned().collect();
    vec![
        check_monad_laws(&composite, &b.corpus).with_id("composite-laws"),
        report("components-quotient", b.descriptor(), components),
        check_reflector_universal(h, &b.corpus, &discrete).with_id("left-adjoint"),
    ]
}

fn cech_stone(b: &Bench) -> Vec<CheckReport> {
    let ultra = b.monad(FilterKind::Ultra);
    let sigma = b.monad(FilterKind::OpenPrime);
    let h = b.reflector(ReflectorKind::Hausdorff);
    let hu = b.compose(ReflectorKind::Hausdorff, &ultra);
    let hs = b.compose(ReflectorKind::Hausdorff, &sigma);
    let h_sigma = NatTrans::whisker_right(&h.unit(), &sigma.functor);
    let gamma = h_sigma.vertical(&b.alpha(FilterKind::OpenPrime)).renamed("γ");
    let mut out = vec![
        check_monad_laws(&hs, &b.corpus).with_id("h-sigma-laws"),
        check_monad_morphism(&gamma, &ultra, &hs, &b.corpus).with_id("gamma-morphism"),
    ];
    match universal_separation(&gamma, h, &hu, &ultra, &hs, &b.corpus) {
        Ok((lambda, rep)) => {
            out.push(rep.with_id("diagram-commutes"));
            out.push(check_natural_homeomorphism(&lambda, &b.corpus).with_id("h-ultra-iso-h-sigma"));
        }
        Err(e) => out.push(report("diagram-commutes", b.descriptor(), Err(err(e)))),
    }
    let components = each(b.corpus.spaces(), |x| {
        components_match(x, &hu.unit.at(x).map_err(err)?)?;
        components_match(x, &hs.unit.at(x).map_err(err)?)
    });
    out.push(report("components-quotient", b.descriptor(), components));
    out
}

fn lemma2_6(b: &Bench) -> Vec<CheckReport> {
    let sources: Vec<FiniteSpace> = (1..=3).map(|n| FiniteSpace::discrete(n).expect("small")).collect();
    let couniversal = patch_couniversality(b.corpus.spaces(), &sources);
    let counits = each(b.corpus.spaces(), |x| match patch_coreflect(x) {
        Ok((patch, k)) => ensure(patch.is_hausdorff() && k.is_proper() && x.is_stably_compact(), || {
            format!("patch counit at X={} is not a proper map from a discrete space", sj(x))
        }),
        Err(Error::NotStablyCompact) => ensure(!x.is_stably_compact(), || format!("refused stably compact X={}", sj(x))),
        Err(e) => Err(err(e)),
    });
    let sierpinski = match patch_coreflect(&FiniteSpace::sierpinski()) {
        Ok((patch, k)) => ensure(patch == FiniteSpace::discrete(2).expect("small") && k.values() == [0, 1], || {
            "patch of the Sierpiński space is not the discrete 2-point space".into()
        }),
        Err(e) => Err(err(e)),
    };
    vec![
        report("couniversal", &format!("{}; discrete sources n<=3", b.descriptor()), couniversal),
        report("counit-proper", b.descriptor(), counits),
        report("sierpinski", "Sierpiński space", sierpinski),
    ]
}

fn sobriety(b: &Bench) -> Vec<CheckReport> {
    let matches = each(b.corpus.spaces(), sobrify_matches_t0);
    let weak = each(b.corpus.spaces(), |x| ensure(x.is_weakly_sober(), || format!("X={} is not weakly sober", sj(x))));
    let sober = each(b.corpus.spaces(), |x| {
        ensure(x.is_sober() == x.is_t0(), || format!("sober differs from T0 at X={}", sj(x)))?;
        ensure(sobrify(x).space.is_sober(), || format!("sobrification of X={} is not sober", sj(x)))
    });
    vec![
        report("sobrify-is-t0", b.descriptor(), matches),
        report("weakly-sober", b.descriptor(), weak),
        report("sober-iff-t0", b.descriptor(), sober),
    ]
}

fn reflectors(b: &Bench) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for kind in ReflectorKind::ALL {
        let r = b.reflector(kind);
        out.push(check_reflector_universal(r, &b.corpus, b.targets()).with_id(format!("universal/{}", kind.name())));
        let units = each(b.corpus.spaces(), |x| {
            let refl = r.reflection(x);
            ensure(refl.unit.is_surjective(), || format!("unit not surjective at X={}", sj(x)))?;
            ensure(kind.admits(&refl.space), || format!("RX not in class at X={}", sj(x)))?;
            ensure(r.reflection(&refl.space).unit.is_homeomorphism(), || format!("R is not idempotent at X={}", sj(x)))
        });
        out.push(report(&format!("units/{}", kind.name()), b.descriptor(), units));
        let factor = first_failure(b.corpus.maps(), |f| {
            if !kind.admits(f.cod()) {
                return Ok(());
            }
            r.factor(f).map(|_| ()).map_err(|e| format!("factoring {:?} from {}: {e}", f.values(), sj(f.dom())))
        });
        out.push(report(&format!("factor-defined/{}", kind.name()), b.descriptor(), factor));
        out.push(check_functor_laws(&r.functor(), &b.corpus).with_id(format!("functor/{}", kind.name())));
    }
    out
}

fn ideal_comonad(b: &Bench) -> Vec<CheckReport> {
    let counit = b.counit();
    let lattices = b.lattices();
    let chain = FiniteFrame::chain(3).expect("chain");
    let chain_iso = {
        let il = frame::ideal_frame(&chain);
        let s = counit(&il);
        ensure(il.frame == chain && s.is_isomorphism(), || "𝔦 of the 3-chain is not the 3-chain".into())
    };
    vec![
        check_ideal_comonad(lattices, &*counit),
        check_ideals_principal(lattices, &*counit),
        check_sigma_natural(&b.lattices_up_to(5), &*counit),
        report("chain", "3-chain", chain_iso),
    ]
}

fn lemma5_8(b: &Bench) -> Vec<CheckReport> {
    let lattices = b.lattices();
    let chain = FiniteFrame::chain(3).expect("chain");
    let example = {
        let (reg, _) = frame::reg_coreflect(&chain);
        let fix = frame::reg_fixpoint(&chain);
        ensure(reg == FiniteFrame::boolean(1).expect("2") && fix == 0b101, || {
            format!("Reg of the 3-chain has {} elements, fixpoint {:?}", reg.len(), bits::to_vec(fix))
        })
    };
    let ideal_lattices: Vec<FiniteFrame> = lattices.iter().map(|l| frame::ideal_frame(l).frame).collect();
    vec![
        check_krregfrm_lemma(lattices),
        check_reg_agreement(lattices),
        check_reg_agreement(&ideal_lattices).with_id("reg-fixpoint-agrees-on-ideals"),
        report("chain", "3-chain", example),
    ]
}

fn prop5_9(b: &Bench) -> Vec<CheckReport> {
    let small = b.lattices_up_to(b.config.mono_lattice_cap);
    let two = FiniteFrame::chain(2).expect("2");
    let three = FiniteFrame::chain(3).expect("3");
    let example = FrameMap::new(two.clone(), three.clone(), vec![0, 2])
        .and_then(|f| frame::ideal_map(&frame::ideal_frame(&two), &frame::ideal_frame(&three), &f))
        .map_err(err)
        .and_then(|g| ensure(g.is_injective(), || "𝔦 of 2 → 3-chain is not injective".into()));
    vec![check_ideal_preserves_monos(&small), report("chain-inclusion", "2 → 3-chain", example)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> SuiteConfig {
        SuiteConfig { max_points: 2, map_points: 2, epi_cap: 3, target_points: 2, lattice_cap: 4, mono_lattice_cap: 4, ..SuiteConfig::default() }
    }

    #[test]
    fn unknown_suite() {
        assert_eq!(run_suite("prop9.9", &quick()), Err(Error::UnknownSuite("prop9.9".into())));
        assert!(matches!("nope".parse::<Fault>(), Err(Error::UnknownFault(_))));
    }

    #[test]
    fn every_suite_passes_on_a_small_corpus() {
        let reports = run_suite("all", &quick()).unwrap();
        let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
        assert!(failed.is_empty(), "{failed:#?}");
    }

    #[test]
    fn faults_are_detected() {
        for fault in Fault::ALL {
            let config = SuiteConfig { fault: Some(fault), ..quick() };
            for suite in fault.target_suites() {
                let reports = run_suite(suite, &config).unwrap();
                assert!(reports.iter().any(CheckReport::failed), "{fault} undetected in {suite}");
            }
        }
    }
}
