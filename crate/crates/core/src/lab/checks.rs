use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::functor::{Functor, Reflector};
use super::monad::MonadSpec;
use super::nat::NatTrans;
use super::report::{CheckReport, Verdict};
use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::io::space_to_json;
use crate::map::{for_each_continuous, ContinuousMap};
use crate::reflect::reflector_universality;
use crate::space::FiniteSpace;

/// First failure in input order, evaluated in parallel.
pub(crate) fn first_failure<T: Sync>(items: &[T], check: impl Fn(&T) -> Verdict + Sync) -> Verdict {
    match items.par_iter().find_map_first(|item| check(item).err()) {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

fn sj(x: &FiniteSpace) -> String {
    space_to_json(x)
}

fn describe(f: &ContinuousMap) -> String {
    format!("{:?}", f.values())
}

fn err(e: Error) -> String {
    e.to_string()
}

/// The component of `a` at `x`, checked against the functors' values and
/// for continuity.
fn component(a: &NatTrans, x: &FiniteSpace) -> Result<ContinuousMap, String> {
    let at = |e: Error| format!("{} at X={}: {e}", a.name(), sj(x));
    let c = a.at(x).map_err(at)?;
    let dom = a.source().object(x).map_err(at)?;
    let cod = a.target().object(x).map_err(at)?;
    if c.dom() != &dom || c.cod() != &cod {
        return Err(format!("{} at X={}: component has the wrong domain or codomain", a.name(), sj(x)));
    }
    ContinuousMap::new(dom, cod, c.values().to_vec()).map_err(at)?;
    Ok(c)
}

fn same(law: &str, x: &FiniteSpace, lhs: &ContinuousMap, rhs: &ContinuousMap) -> Verdict {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{law} fails at X={}: {} vs {}", sj(x), describe(lhs), describe(rhs)))
    }
}

/// `F(1) = 1` on every corpus space and `F(g∘f) = F(g)∘F(f)` on every
/// composable pair of corpus maps.
pub fn check_functor_laws(f: &Functor, corpus: &Corpus) -> CheckReport {
    let maps = corpus.maps();
    let identities = first_failure(corpus.spaces(), |x| {
        let fx = f.object(x).map_err(err)?;
        let image = f.morphism(&ContinuousMap::identity(x)).map_err(err)?;
        same("identity preservation", x, &image, &ContinuousMap::identity(&fx))
    });
    let verdict = identities.and_then(|()| {
        first_failure(maps, |g| {
            let fg = f.morphism(g).map_err(err)?;
            for h in maps.iter().filter(|h| h.dom() == g.cod()) {
                let lhs = f.morphism(&g.then(h).map_err(err)?).map_err(err)?;
                let rhs = fg.then(&f.morphism(h).map_err(err)?).map_err(err)?;
                if lhs != rhs {
                    return Err(format!(
                        "composition fails for f={} then g={} on X={}: {} vs {}",
                        describe(g),
                        describe(h),
                        sj(g.dom()),
                        describe(&lhs),
                        describe(&rhs)
                    ));
                }
            }
            Ok(())
        })
    });
    CheckReport::from_verdict(format!("functor[{}]", f.name()), corpus.descriptor(), verdict)
}

fn naturality(a: &NatTrans, maps: &[ContinuousMap]) -> Verdict {
    first_failure(maps, |f| {
        let ax = component(a, f.dom())?;
        let ay = component(a, f.cod())?;
        let lhs = ax.then(&a.target().morphism(f).map_err(err)?).map_err(err)?;
        let rhs = a.source().morphism(f).map_err(err)?.then(&ay).map_err(err)?;
        if lhs == rhs {
            Ok(())
        } else {
            Err(format!(
                "{} not natural at f={} : {} -> {}: {} vs {}",
                a.name(),
                describe(f),
                sj(f.dom()),
                sj(f.cod()),
                describe(&lhs),
                describe(&rhs)
            ))
        }
    })
}

/// Naturality squares of `a` over every corpus map.
pub fn check_naturality(a: &NatTrans, corpus: &Corpus) -> CheckReport {
    CheckReport::from_verdict(format!("naturality[{}]", a.name()), corpus.descriptor(), naturality(a, corpus.maps()))
}

/// Both unit laws and associativity at every corpus space.
pub fn check_monad_laws(m: &MonadSpec, corpus: &Corpus) -> CheckReport {
    let t = &m.functor;
    let verdict = first_failure(corpus.spaces(), |x| {
        let eta = component(&m.unit, x)?;
        let mu = component(&m.mult, x)?;
        let tx = t.object(x).map_err(err)?;
        let id = ContinuousMap::identity(&tx);
        let eta_t = component(&m.unit, &tx)?;
        same("μ∘ηT = 1", x, &eta_t.then(&mu).map_err(err)?, &id)?;
        let t_eta = t.morphism(&eta).map_err(err)?;
        same("μ∘Tη = 1", x, &t_eta.then(&mu).map_err(err)?, &id)?;
        let mu_t = component(&m.mult, &tx)?;
        let t_mu = t.morphism(&mu).map_err(err)?;
        same("μ∘μT = μ∘Tμ", x, &mu_t.then(&mu).map_err(err)?, &t_mu.then(&mu).map_err(err)?)
    });
    CheckReport::from_verdict(format!("monad-laws[{}]", m.name), corpus.descriptor(), verdict)
}

/// `(a∘a)_X = a_{MX} ∘ T(a_X)`, compared against `M(a_X) ∘ a_{TX}`.
fn square(a: &NatTrans, t: &MonadSpec, m: &MonadSpec, x: &FiniteSpace) -> Result<ContinuousMap, String> {
    let ax = component(a, x)?;
    let mx = m.functor.object(x).map_err(err)?;
    let tx = t.functor.object(x).map_err(err)?;
    let first = t.functor.morphism(&ax).map_err(err)?.then(&component(a, &mx)?).map_err(err)?;
    let second = component(a, &tx)?.then(&m.functor.morphism(&ax).map_err(err)?).map_err(err)?;
    same("middle interchange for a∘a", x, &first, &second)?;
    Ok(first)
}

/// `a∘η = e` and `a∘μ = m∘(a∘a)` at every corpus space, plus naturality
/// of `a` over the corpus maps.
pub fn check_monad_morphism(a: &NatTrans, t: &MonadSpec, m: &MonadSpec, corpus: &Corpus) -> CheckReport {
    let pointwise = first_failure(corpus.spaces(), |x| {
        let ax = component(a, x)?;
        let eta_t = component(&t.unit, x)?;
        let eta_m = component(&m.unit, x)?;
        same("a∘η = e", x, &eta_t.then(&ax).map_err(err)?, &eta_m)?;
        let aa = square(a, t, m, x)?;
        let lhs = component(&t.mult, x)?.then(&ax).map_err(err)?;
        let rhs = aa.then(&component(&m.mult, x)?).map_err(err)?;
        same("a∘μ = m∘(a∘a)", x, &lhs, &rhs)
    });
    let verdict = pointwise.and_then(|()| naturality(a, corpus.maps()));
    CheckReport::from_verdict(
        format!("monad-morphism[{}: {} -> {}]", a.name(), t.name, m.name),
        corpus.descriptor(),
        verdict,
    )
}

/// The two middle-interchange decompositions of `β∘α` agree.
pub fn check_interchange(beta: &NatTrans, alpha: &NatTrans, corpus: &Corpus) -> CheckReport {
    let one = NatTrans::horizontal(beta, alpha);
    let two = NatTrans::horizontal_alt(beta, alpha);
    let verdict = first_failure(corpus.spaces(), |x| {
        same("βG·Hα = Kα·βF", x, &one.at(x).map_err(err)?, &two.at(x).map_err(err)?)
    });
    CheckReport::from_verdict(format!("interchange[{}∘{}]", beta.name(), alpha.name()), corpus.descriptor(), verdict)
}

/// Components are homeomorphisms and the transformation is natural.
pub fn check_natural_homeomorphism(a: &NatTrans, corpus: &Corpus) -> CheckReport {
    let pointwise = first_failure(corpus.spaces(), |x| {
        let ax = component(a, x)?;
        if ax.is_homeomorphism() {
            Ok(())
        } else {
            Err(format!("{} at X={} is not a homeomorphism: {}", a.name(), sj(x), describe(&ax)))
        }
    });
    let verdict = pointwise.and_then(|()| naturality(a, corpus.maps()));
    CheckReport::from_verdict(format!("natural-homeomorphism[{}]", a.name()), corpus.descriptor(), verdict)
}

/// First continuous `s : B → A` with `s ∘ m = 1_A`, in lexicographic order.
pub fn find_splitting(m: &ContinuousMap) -> Option<ContinuousMap> {
    if !m.is_injective() {
        return None;
    }
    let mut fixed = vec![None; m.cod().len()];
    for (a, &b) in m.values().iter().enumerate() {
        fixed[b] = Some(a);
    }
    let mut found = None;
    for_each_continuous(m.cod(), m.dom(), &fixed, |values| {
        found = Some(values.to_vec());
        false
    });
    found.map(|values| ContinuousMap::new_unchecked(m.cod().clone(), m.dom().clone(), values))
}

/// Two distinct continuous `g, h : B → Z` with `g∘m = h∘m`, for `Z` among
/// `tests`.
pub fn epi_witness(m: &ContinuousMap, tests: &[FiniteSpace]) -> Option<String> {
    for z in tests {
        let mut seen: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        let mut witness = None;
        for_each_continuous(m.cod(), z, &vec![None; m.cod().len()], |g| {
            let composite: Vec<usize> = m.values().iter().map(|&b| g[b]).collect();
            if let Some(h) = seen.get(&composite) {
                witness = Some(format!("{h:?} and {g:?} into {} agree after {}", sj(z), describe(m)));
                return false;
            }
            seen.insert(composite, g.to_vec());
            true
        });
        if witness.is_some() {
            return witness;
        }
    }
    None
}

/// Two distinct continuous `g, h : W → A` with `m∘g = m∘h`, for `W` among
/// `tests`.
pub fn mono_witness(m: &ContinuousMap, tests: &[FiniteSpace]) -> Option<String> {
    for w in tests {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut witness = None;
        for_each_continuous(w, m.dom(), &vec![None; w.len()], |g| {
            let composite: Vec<usize> = g.iter().map(|&a| m.apply(a)).collect();
            if !seen.insert(composite) {
                witness = Some(format!("two maps from {} agree after {}", sj(w), describe(m)));
                return false;
            }
            true
        });
        if witness.is_some() {
            return witness;
        }
    }
    None
}

/// `Rη_X` is epi among `R`-objects, tested both as a parallel-pair
/// condition on `η_X : X → TX` and directly on `Rη_X : RX → RTX`, with
/// codomains drawn from `tests`.
pub fn check_reta_epi(r: &Reflector, t: &MonadSpec, corpus: &Corpus, tests: &[FiniteSpace]) -> CheckReport {
    let class: Vec<FiniteSpace> = tests.iter().filter(|z| r.class().admits(z)).cloned().collect();
    let rf = r.functor();
    let verdict = first_failure(corpus.spaces(), |x| {
        let eta = component(&t.unit, x)?;
        let pairs = epi_witness(&eta, &class);
        let r_eta = rf.morphism(&eta).map_err(err)?;
        let direct = epi_witness(&r_eta, &class);
        match (pairs, direct) {
            (None, None) => Ok(()),
            (Some(_), None) | (None, Some(_)) => {
                Err(format!("the two formulations disagree at X={}", sj(x)))
            }
            (Some(_), Some(w)) => Err(format!("Rη not epi at X={}: {w}", sj(x))),
        }
    });
    CheckReport::from_verdict(
        format!("reta-epi[{}, {}]", r.name(), t.name),
        format!("{}; test objects {}", corpus.descriptor(), class.len()),
        verdict,
    )
}

fn idempotent(m: &MonadSpec, corpus: &Corpus) -> Verdict {
    first_failure(corpus.spaces(), |x| {
        let mu = component(&m.mult, x)?;
        if mu.is_homeomorphism() {
            Ok(())
        } else {
            Err(format!("μ at X={} is not a homeomorphism: {}", sj(x), describe(&mu)))
        }
    })
}

/// Every multiplication component is a homeomorphism.
pub fn check_idempotent(m: &MonadSpec, corpus: &Corpus) -> CheckReport {
    CheckReport::from_verdict(format!("idempotent[{}]", m.name), corpus.descriptor(), idempotent(m, corpus))
}

/// For an idempotent monad: wherever the unit is mono it is also epi,
/// both decided against `tests`.
pub fn fakir_test(m: &MonadSpec, corpus: &Corpus, tests: &[FiniteSpace]) -> CheckReport {
    let id = format!("fakir[{}]", m.name);
    let descriptor = format!("{}; test objects {}", corpus.descriptor(), tests.len());
    if idempotent(m, corpus).is_err() {
        return CheckReport::not_applicable(id, descriptor);
    }
    let verdict = first_failure(corpus.spaces(), |x| {
        let eta = component(&m.unit, x)?;
        if mono_witness(&eta, tests).is_some() {
            return Ok(());
        }
        match epi_witness(&eta, tests) {
            None => Ok(()),
            Some(w) => Err(format!("unit at X={} is mono but not epi: {w}", sj(x))),
        }
    });
    CheckReport::from_verdict(id, descriptor, verdict)
}

/// For `γ : T → M` with `M` landing in `R`'s class and `T` preserving
/// surjections, the transformation `λ : RT → M` with `λ·rT = γ`, and a
/// report on it being a monad morphism and the unique such factorization.
pub fn universal_separation(
    gamma: &NatTrans,
    r: &Reflector,
    composite: &MonadSpec,
    t: &MonadSpec,
    m: &MonadSpec,
    corpus: &Corpus,
) -> Result<(NatTrans, CheckReport)> {
    for x in corpus.spaces() {
        let mx = m.functor.object(x)?;
        if !r.class().admits(&mx) {
            return Err(Error::HypothesisViolated(format!(
                "{}X is not {} at X={}",
                m.name,
                r.class(),
                sj(x)
            )));
        }
    }
    for f in corpus.maps().iter().filter(|f| f.is_surjective()) {
        if !t.functor.morphism(f)?.is_surjective() {
            return Err(Error::HypothesisViolated(format!(
                "{} does not preserve the surjection {} on {}",
                t.name,
                describe(f),
                sj(f.dom())
            )));
        }
    }
    let (g, rr) = (gamma.clone(), r.clone());
    let tf = t.functor.clone();
    let lambda = NatTrans::new(
        format!("λ[{}]", gamma.name()),
        composite.functor.clone(),
        m.functor.clone(),
        move |x| {
            let tx = tf.object(x)?;
            let gx = g.at(x)?;
            debug_assert_eq!(gx.dom(), &tx);
            rr.factor(&gx)
        },
    );
    let factorization = first_failure(corpus.spaces(), |x| {
        let tx = t.functor.object(x).map_err(err)?;
        let rtx = r.reflection(&tx);
        let gx = component(gamma, x)?;
        let lx = component(&lambda, x)?;
        same("λ·rT = γ", x, &rtx.unit.then(&lx).map_err(err)?, &gx)?;
        let mut count = 0usize;
        for_each_continuous(&rtx.space, gx.cod(), &vec![None; rtx.space.len()], |phi| {
            if rtx.unit.values().iter().map(|&p| phi[p]).eq(gx.values().iter().copied()) {
                count += 1;
            }
            true
        });
        if count == 1 {
            Ok(())
        } else {
            Err(format!("{count} maps φ with φ·rT = γ at X={}", sj(x)))
        }
    });
    let morphism = check_monad_morphism(&lambda, composite, m, corpus);
    let verdict = factorization.and_then(|()| if morphism.failed() { Err(morphism.witness.clone()) } else { Ok(()) });
    let report = CheckReport::from_verdict(
        format!("universal-separation[{} via {}]", gamma.name(), r.name()),
        corpus.descriptor(),
        verdict,
    );
    Ok((lambda, report))
}

/// Every continuous map from a corpus space into a target in `R`'s class
/// factors uniquely through the unit.
pub fn check_reflector_universal(r: &Reflector, corpus: &Corpus, targets: &[FiniteSpace]) -> CheckReport {
    let class: Vec<FiniteSpace> = targets.iter().filter(|z| r.class().admits(z)).cloned().collect();
    let reflect = |x: &FiniteSpace| (*r.reflection(x)).clone();
    let verdict = reflector_universality(&reflect, corpus.spaces(), &class);
    CheckReport::from_verdict(
        format!("reflector-universal[{}]", r.name()),
        format!("{}; targets {}", corpus.descriptor(), class.len()),
        verdict,
    )
}
