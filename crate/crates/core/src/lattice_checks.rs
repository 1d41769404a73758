//! Law checks for the ideal comonad and the regular coreflection over a
//! corpus of finite frames.

use crate::bits;
use crate::error::Result;
use crate::frame::*;
use crate::lab::{first_failure, CheckReport, Verdict};

/// Which counit to use for `𝔦`; fault injection swaps in a broken one.
pub type Counit = dyn Fn(&IdealFrame) -> FrameMap + Sync;

/// Covering pairs, the readable form of a lattice in witnesses.
fn show(l: &FiniteFrame) -> String {
    format!("{} elements, covers {:?}", l.len(), l.covers())
}

fn lattices_descriptor(lattices: &[FiniteFrame]) -> String {
    let max = lattices.iter().map(FiniteFrame::len).max().unwrap_or(0);
    format!("distributive lattices k<={max} ({})", lattices.len())
}

fn same(law: &str, l: &FiniteFrame, lhs: &FrameMap, rhs: &FrameMap) -> Verdict {
    if lhs.values() == rhs.values() && lhs.dom() == rhs.dom() && lhs.cod() == rhs.cod() {
        Ok(())
    } else {
        Err(format!("{law} fails at L = {}: {:?} vs {:?}", show(l), lhs.values(), rhs.values()))
    }
}

fn comonad_laws(l: &FiniteFrame, counit: &Counit) -> Result<Verdict> {
    let il = ideal_frame(l);
    let iil = ideal_frame(&il.frame);
    let iiil = ideal_frame(&iil.frame);
    let s = counit(&il);
    let s_il = counit(&iil);
    let c = comult(&il, &iil)?;
    let c_il = comult(&iil, &iiil)?;
    let id = FrameMap::identity(&il.frame);
    let left = c.then(&s_il)?;
    let right = c.then(&ideal_map(&iil, &il, &s)?)?;
    let assoc_lhs = c.then(&c_il)?;
    let assoc_rhs = c.then(&ideal_map(&iil, &iiil, &c)?)?;
    let verdict = same("σ𝔦 ∘ c = 1", l, &left, &id)
        .and_then(|()| same("𝔦σ ∘ c = 1", l, &right, &id))
        .and_then(|()| same("c𝔦 ∘ c = 𝔦c ∘ c", l, &assoc_lhs, &assoc_rhs));
    Ok(verdict)
}

/// Counit and comultiplication laws for `(𝔦, σ, c)` on every lattice.
pub fn check_ideal_comonad(lattices: &[FiniteFrame], counit: &Counit) -> CheckReport {
    let verdict = first_failure(lattices, |l| {
        comonad_laws(l, counit).unwrap_or_else(|e| Err(format!("at L = {}: {e}", show(l))))
    });
    CheckReport::from_verdict("ideal-comonad-laws", lattices_descriptor(lattices), verdict)
}

/// `σ_L : 𝔦L → L` is an isomorphism: every ideal is principal.
pub fn check_ideals_principal(lattices: &[FiniteFrame], counit: &Counit) -> CheckReport {
    let verdict = first_failure(lattices, |l| {
        let il = ideal_frame(l);
        let s = counit(&il);
        let principal = il.ideals.iter().all(|&i| i == l.down(l.join_all(i)));
        if principal && s.is_isomorphism() && FrameMap::new(s.dom().clone(), s.cod().clone(), s.values().to_vec()).is_ok() {
            Ok(())
        } else {
            Err(format!("σ is not an isomorphism at L = {}: {:?}", show(l), s.values()))
        }
    });
    CheckReport::from_verdict("ideal-principal", lattices_descriptor(lattices), verdict)
}

/// Naturality of `σ` over every frame map between the lattices.
pub fn check_sigma_natural(lattices: &[FiniteFrame], counit: &Counit) -> CheckReport {
    let verdict = first_failure(lattices, |l| {
        let il = ideal_frame(l);
        for m in lattices {
            let im = ideal_frame(m);
            for f in enumerate_frame_maps(l, m) {
                let lhs = counit(&il).then(&f).map_err(|e| e.to_string())?;
                let rhs = ideal_map(&il, &im, &f).and_then(|g| g.then(&counit(&im))).map_err(|e| e.to_string())?;
                if lhs.values() != rhs.values() {
                    return Err(format!("σ not natural at f = {:?} from L = {}", f.values(), show(l)));
                }
            }
        }
        Ok(())
    });
    CheckReport::from_verdict("ideal-counit-natural", lattices_descriptor(lattices), verdict)
}

/// The exhaustive and fixpoint computations of the largest regular
/// subframe agree, and the maximum is unique.
pub fn check_reg_agreement(lattices: &[FiniteFrame]) -> CheckReport {
    let verdict = first_failure(lattices, |l| {
        let maximal = maximal_regular_subframes(l);
        if maximal.len() != 1 {
            return Err(format!("{} maximal regular subframes at L = {}: {maximal:?}", maximal.len(), show(l)));
        }
        let fixpoint = reg_fixpoint(l);
        if fixpoint != maximal[0] {
            return Err(format!(
                "fixpoint {:?} differs from exhaustive {:?} at L = {}",
                bits::to_vec(fixpoint),
                bits::to_vec(maximal[0]),
                show(l)
            ));
        }
        Ok(())
    });
    CheckReport::from_verdict("reg-fixpoint-agrees", lattices_descriptor(lattices), verdict)
}

fn krregfrm(l: &FiniteFrame) -> Verdict {
    let il = ideal_frame(l);
    let (reg, inclusion) = reg_coreflect(&il.frame);
    let fail = |what: &str| Err(format!("Reg 𝔦L is not {what} at L = {}", show(l)));
    if !is_compact_frame(&reg) {
        return fail("compact");
    }
    if !is_regular(&reg) {
        return fail("regular");
    }
    if !is_stably_continuous(&reg) {
        return fail("stably continuous");
    }
    if !reg.is_boolean() {
        return fail("Boolean");
    }
    let (_, reg_l) = reg_coreflect(l);
    let s = sigma(&il);
    let values = (0..reg.len())
        .map(|a| {
            let image = s.apply(inclusion.apply(a));
            reg_l.values().iter().position(|&b| b == image)
        })
        .collect::<Option<Vec<_>>>();
    let Some(values) = values else {
        return Err(format!("σ does not map Reg 𝔦L into Reg L at L = {}", show(l)));
    };
    let reg_sigma = FrameMap::new(reg.clone(), reg_l.dom().clone(), values).map_err(|e| format!("Reg σ at L = {}: {e}", show(l)))?;
    if !reg_sigma.is_dense() || !reg_sigma.is_injective() {
        return Err(format!("Reg σ is not dense and injective at L = {}: {:?}", show(l), reg_sigma.values()));
    }
    Ok(())
}

/// `Reg 𝔦L` is compact, regular, stably continuous and Boolean, and
/// `Reg σ` is dense and injective.
pub fn check_krregfrm_lemma(lattices: &[FiniteFrame]) -> CheckReport {
    CheckReport::from_verdict("reg-ideal-compact-regular", lattices_descriptor(lattices), first_failure(lattices, krregfrm))
}

/// `𝔦f` is injective for every injective frame map between the lattices.
pub fn check_ideal_preserves_monos(lattices: &[FiniteFrame]) -> CheckReport {
    let verdict = first_failure(lattices, |l| {
        let il = ideal_frame(l);
        for m in lattices {
            let im = ideal_frame(m);
            for f in enumerate_frame_maps(l, m).into_iter().filter(FrameMap::is_injective) {
                let lifted = ideal_map(&il, &im, &f).map_err(|e| e.to_string())?;
                if !lifted.is_injective() {
                    return Err(format!("𝔦f not injective for f = {:?} from L = {}", f.values(), show(l)));
                }
            }
        }
        Ok(())
    });
    CheckReport::from_verdict("ideal-preserves-monos", lattices_descriptor(lattices), verdict)
}

/// `a ≪ b ⇔ a ≤ b`, and every frame map preserves `≪`.
pub fn check_way_below_degenerates(lattices: &[FiniteFrame]) -> CheckReport {
    let verdict = first_failure(lattices, |l| {
        for a in 0..l.len() {
            for b in 0..l.len() {
                if way_below_lattice(l, a, b) != way_below_shortcut(l, a, b) {
                    return Err(format!("≪ differs from ≤ at ({a}, {b}) in L = {}", show(l)));
                }
            }
        }
        if !is_stably_continuous(l) {
            return Err(format!("L = {} is not stably continuous", show(l)));
        }
        for m in lattices {
            if let Some(f) = enumerate_frame_maps(l, m).into_iter().find(|f| !f.is_proper()) {
                return Err(format!("frame map {:?} from L = {} is not proper", f.values(), show(l)));
            }
        }
        Ok(())
    });
    CheckReport::from_verdict("frame-way-below-finite", lattices_descriptor(lattices), verdict)
}
