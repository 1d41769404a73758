//! Finite frames (finite distributive lattices) and their frame maps.

use std::collections::HashSet;
use std::fmt;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::map::{next_permutation, ContinuousMap};
use crate::space::FiniteSpace;

/// Largest carrier accepted; element subsets are stored as masks.
pub const MAX_ELEMENTS: usize = 16;

/// A finite bounded distributive lattice given by explicit tables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteFrame {
    k: usize,
    leq: Vec<bool>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl fmt::Debug for FiniteFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteFrame({} elements, covers {:?})", self.k, self.covers())
    }
}

impl FiniteFrame {
    /// Builds the tables from an order relation `le(a, b)`, rejecting
    /// anything that is not a bounded distributive lattice.
    pub fn from_order(k: usize, le: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if k == 0 {
            return Err(Error::NotAFrame("a frame has at least one element".into()));
        }
        if k > MAX_ELEMENTS {
            return Err(Error::BoundExceeded(format!("{k} elements (max {MAX_ELEMENTS})")));
        }
        let mut leq = vec![false; k * k];
        for a in 0..k {
            for b in 0..k {
                leq[a * k + b] = le(a, b);
            }
        }
        let at = |a: usize, b: usize| leq[a * k + b];
        for a in 0..k {
            if !at(a, a) {
                return Err(Error::NotAFrame(format!("order is not reflexive at {a}")));
            }
            for b in 0..k {
                if a != b && at(a, b) && at(b, a) {
                    return Err(Error::NotAFrame(format!("{a} and {b} are distinct but equivalent")));
                }
                for c in 0..k {
                    if at(a, b) && at(b, c) && !at(a, c) {
                        return Err(Error::NotAFrame(format!("order is not transitive at {a} ≤ {b} ≤ {c}")));
                    }
                }
            }
        }
        let least = |candidates: Vec<usize>, below: bool| -> Option<usize> {
            candidates.iter().copied().find(|&c| {
                candidates.iter().all(|&d| if below { at(c, d) } else { at(d, c) })
            })
        };
        let mut join = vec![0; k * k];
        let mut meet = vec![0; k * k];
        for a in 0..k {
            for b in 0..k {
                let upper: Vec<usize> = (0..k).filter(|&c| at(a, c) && at(b, c)).collect();
                let lower: Vec<usize> = (0..k).filter(|&c| at(c, a) && at(c, b)).collect();
                join[a * k + b] = least(upper, true)
                    .ok_or_else(|| Error::NotAFrame(format!("{a} and {b} have no join")))?;
                meet[a * k + b] = least(lower, false)
                    .ok_or_else(|| Error::NotAFrame(format!("{a} and {b} have no meet")))?;
            }
        }
        let bottom = (0..k).find(|&a| (0..k).all(|b| at(a, b))).ok_or_else(|| Error::NotAFrame("no bottom".into()))?;
        let top = (0..k).find(|&a| (0..k).all(|b| at(b, a))).ok_or_else(|| Error::NotAFrame("no top".into()))?;
        let frame = FiniteFrame { k, leq, join, meet, bottom, top };
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if frame.meet(a, frame.join(b, c)) != frame.join(frame.meet(a, b), frame.meet(a, c)) {
                        return Err(Error::NotAFrame(format!(
                            "not distributive: {a} ∧ ({b} ∨ {c}) differs from ({a} ∧ {b}) ∨ ({a} ∧ {c})"
                        )));
                    }
                }
            }
        }
        Ok(frame)
    }

    /// The order generated by `pairs` (`a ≤ b`) under reflexive-transitive
    /// closure.
    pub fn from_pairs(k: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if k == 0 || k > MAX_ELEMENTS {
            return Self::from_order(k, |_, _| false);
        }
        let mut up: Vec<Mask> = (0..k).map(bits::singleton).collect();
        for &(a, b) in pairs {
            if a >= k || b >= k {
                return Err(Error::InvalidInput(format!("pair [{a}, {b}] out of range for {k} elements")));
            }
            up[a] |= bits::singleton(b);
        }
        loop {
            let mut changed = false;
            for a in 0..k {
                let closed = bits::members(up[a]).fold(up[a], |acc, b| acc | up[b]);
                if closed != up[a] {
                    up[a] = closed;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Self::from_order(k, |a, b| bits::contains(up[a], b))
    }

    /// A family of sets ordered by inclusion, indexed in the given order.
    pub fn from_family(sets: &[Mask]) -> Result<Self> {
        Self::from_order(sets.len(), |a, b| bits::is_subset(sets[a], sets[b]))
    }

    pub fn len(&self) -> usize {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.k == 0
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.k + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.k + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.k + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn all(&self) -> Mask {
        bits::full(self.k)
    }

    pub fn join_all(&self, s: Mask) -> usize {
        bits::members(s).fold(self.bottom, |acc, a| self.join(acc, a))
    }

    pub fn meet_all(&self, s: Mask) -> usize {
        bits::members(s).fold(self.top, |acc, a| self.meet(acc, a))
    }

    pub fn down(&self, a: usize) -> Mask {
        bits::from_members((0..self.k).filter(|&b| self.le(b, a)))
    }

    /// Hasse diagram edges `(a, b)` with `a` covered by `b`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.k {
            for b in 0..self.k {
                if a != b && self.le(a, b) && !(0..self.k).any(|c| c != a && c != b && self.le(a, c) && self.le(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn chain(k: usize) -> Result<Self> {
        Self::from_order(k, |a, b| a <= b)
    }

    /// The powerset of an `n`-element set.
    pub fn boolean(n: usize) -> Result<Self> {
        let sets: Vec<Mask> = bits::submasks(bits::full(n)).collect();
        Self::from_family(&sets)
    }

    /// Sub-carrier `s` as a frame in its own right, with elements in
    /// ascending order, plus the indices it came from.
    pub fn restrict(&self, s: Mask) -> Result<(FiniteFrame, Vec<usize>)> {
        let index: Vec<usize> = bits::to_vec(s);
        let sub = FiniteFrame::from_order(index.len(), |a, b| self.le(index[a], index[b]))?;
        Ok((sub, index))
    }

    /// Contains `0`, `1` and is closed under binary joins and meets.
    pub fn is_subframe(&self, s: Mask) -> bool {
        bits::contains(s, self.bottom)
            && bits::contains(s, self.top)
            && bits::members(s).all(|a| {
                bits::members(s).all(|b| bits::contains(s, self.join(a, b)) && bits::contains(s, self.meet(a, b)))
            })
    }

    /// Every subframe carrier in ascending mask order.
    pub fn subframes(&self) -> Vec<Mask> {
        let fixed = bits::singleton(self.bottom) | bits::singleton(self.top);
        bits::submasks(self.all() & !fixed)
            .map(|s| s | fixed)
            .filter(|&s| self.is_subframe(s))
            .collect()
    }

    /// Every element has a complement.
    pub fn is_boolean(&self) -> bool {
        (0..self.k).all(|a| (0..self.k).any(|b| self.join(a, b) == self.top && self.meet(a, b) == self.bottom))
    }
}

/// `a* = ⋁{x : x ∧ a = 0}`.
pub fn pseudocomplement(l: &FiniteFrame, a: usize) -> usize {
    let disjoint = bits::from_members((0..l.len()).filter(|&x| l.meet(x, a) == l.bottom()));
    l.join_all(disjoint)
}

/// `a ≺ b` iff `b ∨ a* = 1`.
pub fn rather_below(l: &FiniteFrame, a: usize, b: usize) -> bool {
    l.join(b, pseudocomplement(l, a)) == l.top()
}

/// Every element is the join of the elements rather below it.
pub fn is_regular(l: &FiniteFrame) -> bool {
    (0..l.len()).all(|a| {
        let approximants = bits::from_members((0..l.len()).filter(|&c| rather_below(l, c, a)));
        l.join_all(approximants) == a
    })
}

/// A frame homomorphism between finite frames.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrameMap {
    dom: FiniteFrame,
    cod: FiniteFrame,
    map: Vec<usize>,
}

impl FrameMap {
    /// Checks preservation of `0`, `1`, binary joins and binary meets.
    pub fn new(dom: FiniteFrame, cod: FiniteFrame, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.len() || map.iter().any(|&v| v >= cod.len()) {
            return Err(Error::NotAFrameMap("map does not fit its domain and codomain".into()));
        }
        if map[dom.bottom()] != cod.bottom() || map[dom.top()] != cod.top() {
            return Err(Error::NotAFrameMap("bottom or top not preserved".into()));
        }
        for a in 0..dom.len() {
            for b in 0..dom.len() {
                if map[dom.join(a, b)] != cod.join(map[a], map[b]) {
                    return Err(Error::NotAFrameMap(format!("join of {a} and {b} not preserved")));
                }
                if map[dom.meet(a, b)] != cod.meet(map[a], map[b]) {
                    return Err(Error::NotAFrameMap(format!("meet of {a} and {b} not preserved")));
                }
            }
        }
        Ok(FrameMap { dom, cod, map })
    }

    pub(crate) fn new_unchecked(dom: FiniteFrame, cod: FiniteFrame, map: Vec<usize>) -> Self {
        FrameMap { dom, cod, map }
    }

    pub fn identity(l: &FiniteFrame) -> Self {
        FrameMap { dom: l.clone(), cod: l.clone(), map: (0..l.len()).collect() }
    }

    pub fn dom(&self) -> &FiniteFrame {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteFrame {
        &self.cod
    }

    pub fn values(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &FrameMap) -> Result<FrameMap> {
        if self.cod != next.dom {
            return Err(Error::DomainMismatch);
        }
        Ok(FrameMap {
            dom: self.dom.clone(),
            cod: next.cod.clone(),
            map: self.map.iter().map(|&b| next.map[b]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let image: HashSet<usize> = self.map.iter().copied().collect();
        image.len() == self.map.len()
    }

    pub fn is_surjective(&self) -> bool {
        let image: HashSet<usize> = self.map.iter().copied().collect();
        image.len() == self.cod.len()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Only the bottom element is sent to the bottom.
    pub fn is_dense(&self) -> bool {
        (0..self.dom.len()).all(|a| self.map[a] != self.cod.bottom() || a == self.dom.bottom())
    }

    /// Preserves the way-below relation.
    pub fn is_proper(&self) -> bool {
        (0..self.dom.len()).all(|a| {
            (0..self.dom.len()).all(|b| {
                !way_below_lattice(&self.dom, a, b) || way_below_lattice(&self.cod, self.map[a], self.map[b])
            })
        })
    }
}

/// All frame maps `dom → cod`, lexicographic in the value array.
pub fn enumerate_frame_maps(dom: &FiniteFrame, cod: &FiniteFrame) -> Vec<FrameMap> {
    let k = dom.len();
    let mut values = vec![0; k];
    let mut out = Vec::new();
    loop {
        if values[dom.bottom()] == cod.bottom() && values[dom.top()] == cod.top() {
            if let Ok(f) = FrameMap::new(dom.clone(), cod.clone(), values.clone()) {
                out.push(f);
            }
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if values[pos] + 1 < cod.len() {
                values[pos] += 1;
                break;
            }
            values[pos] = 0;
        }
    }
}

/// Opens of `x` ordered by inclusion, indexed in ascending mask order.
pub fn opens_frame(x: &FiniteSpace) -> FiniteFrame {
    FiniteFrame::from_family(x.opens()).expect("opens form a distributive lattice")
}

/// `O(f) : O(Y) → O(X)`, `V ↦ f⁻¹(V)`.
pub fn opens_map(f: &ContinuousMap) -> FrameMap {
    let (ox, oy) = (opens_frame(f.dom()), opens_frame(f.cod()));
    let values = f
        .cod()
        .opens()
        .iter()
        .map(|&v| f.dom().opens().binary_search(&f.preimage(v)).expect("preimage is open"))
        .collect();
    FrameMap::new(oy, ox, values).expect("preimage preserves unions and intersections")
}

/// Regularity of the subframe carried by `s`, computed inside it.
fn subframe_is_regular(l: &FiniteFrame, s: Mask) -> bool {
    let (sub, _) = l.restrict(s).expect("subframes are frames");
    is_regular(&sub)
}

/// Maximal regular subframe carriers under inclusion.
pub fn maximal_regular_subframes(l: &FiniteFrame) -> Vec<Mask> {
    let regular: Vec<Mask> = l.subframes().into_iter().filter(|&s| subframe_is_regular(l, s)).collect();
    regular
        .iter()
        .copied()
        .filter(|&s| !regular.iter().any(|&t| t != s && bits::is_subset(s, t)))
        .collect()
}

/// The largest regular subframe and its inclusion, by exhaustive search.
pub fn reg_coreflect(l: &FiniteFrame) -> (FiniteFrame, FrameMap) {
    let maximal = maximal_regular_subframes(l);
    let s = maximal.iter().copied().max_by_key(|s| s.count_ones()).expect("{0, 1} is regular");
    let (sub, index) = l.restrict(s).expect("subframes are frames");
    let inclusion = FrameMap::new(sub.clone(), l.clone(), index).expect("subframe inclusion");
    (sub, inclusion)
}

/// Repeatedly discards elements that are not the join of their
/// rather-below approximants, with `≺` recomputed inside the survivors.
pub fn reg_fixpoint(l: &FiniteFrame) -> Mask {
    let mut s = l.all();
    loop {
        let star = |a: usize| l.join_all(bits::from_members(bits::members(s).filter(|&x| l.meet(x, a) == l.bottom())));
        let keep = bits::from_members(bits::members(s).filter(|&a| {
            let approximants = bits::from_members(bits::members(s).filter(|&c| l.join(a, star(c)) == l.top()));
            l.join_all(approximants) == a
        }));
        if keep == s {
            return s;
        }
        s = keep;
    }
}

/// `a ≪ b`: every subset joining above `b` has a finite subset joining
/// above `a`.
pub fn way_below_lattice(l: &FiniteFrame, a: usize, b: usize) -> bool {
    bits::submasks(l.all()).all(|s| {
        !l.le(b, l.join_all(s)) || bits::submasks(s).any(|f| l.le(a, l.join_all(f)))
    })
}

/// The finite shortcut `a ≪ b ⇔ a ≤ b`.
pub fn way_below_shortcut(l: &FiniteFrame, a: usize, b: usize) -> bool {
    l.le(a, b)
}

/// `1 ≪ 1`.
pub fn is_compact_frame(l: &FiniteFrame) -> bool {
    way_below_lattice(l, l.top(), l.top())
}

/// `≪` approximates every element, `1 ≪ 1`, and `a ≪ b, a ≪ c ⇒ a ≪ b ∧ c`.
pub fn is_stably_continuous(l: &FiniteFrame) -> bool {
    let k = l.len();
    let wb: Vec<bool> = (0..k * k).map(|i| way_below_lattice(l, i / k, i % k)).collect();
    let below = |a: usize, b: usize| wb[a * k + b];
    let approximating = (0..k).all(|b| l.join_all(bits::from_members((0..k).filter(|&a| below(a, b)))) == b);
    let multiplicative = (0..k).all(|a| {
        (0..k).all(|b| (0..k).all(|c| !(below(a, b) && below(a, c)) || below(a, l.meet(b, c))))
    });
    approximating && below(l.top(), l.top()) && multiplicative
}

/// The frame of ideals of `l` with the carrier of each ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFrame {
    pub base: FiniteFrame,
    pub ideals: Vec<Mask>,
    pub frame: FiniteFrame,
}

impl IdealFrame {
    pub fn locate(&self, ideal: Mask) -> Option<usize> {
        self.ideals.binary_search(&ideal).ok()
    }
}

/// Nonempty down-sets closed under binary joins.
pub fn is_ideal(l: &FiniteFrame, s: Mask) -> bool {
    s != 0
        && bits::members(s).all(|a| bits::is_subset(l.down(a), s))
        && bits::members(s).all(|a| bits::members(s).all(|b| bits::contains(s, l.join(a, b))))
}

/// Ideals enumerated over every subset of the carrier, ordered by
/// inclusion.
pub fn ideal_frame(l: &FiniteFrame) -> IdealFrame {
    let ideals: Vec<Mask> = bits::submasks(l.all()).filter(|&s| is_ideal(l, s)).collect();
    let frame = FiniteFrame::from_family(&ideals).expect("ideals form a frame");
    IdealFrame { base: l.clone(), ideals, frame }
}

/// `σ_L : 𝔦L → L`, `I ↦ ⋁I`.
pub fn sigma(il: &IdealFrame) -> FrameMap {
    let values = il.ideals.iter().map(|&i| il.base.join_all(i)).collect();
    FrameMap::new(il.frame.clone(), il.base.clone(), values).expect("σ is a frame map")
}

/// `c_L : 𝔦L → 𝔦𝔦L`, `J ↦ {I : σ(I) ∈ J}`.
pub fn comult(il: &IdealFrame, iil: &IdealFrame) -> Result<FrameMap> {
    if iil.base != il.frame {
        return Err(Error::DomainMismatch);
    }
    let s = sigma(il);
    let values = il
        .ideals
        .iter()
        .map(|&j| {
            let set = bits::from_members((0..il.ideals.len()).filter(|&i| bits::contains(j, s.apply(i))));
            iil.locate(set).ok_or_else(|| Error::NotAFrameMap("c(J) is not an ideal".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    FrameMap::new(il.frame.clone(), iil.frame.clone(), values)
}

/// `𝔦f : 𝔦L → 𝔦M`, `I ↦ ⋃↓{f(a) : a ∈ I}`.
pub fn ideal_map(il: &IdealFrame, im: &IdealFrame, f: &FrameMap) -> Result<FrameMap> {
    if &il.base != f.dom() || &im.base != f.cod() {
        return Err(Error::DomainMismatch);
    }
    let values = il
        .ideals
        .iter()
        .map(|&i| {
            let image = bits::members(i).fold(0, |acc, a| acc | im.base.down(f.apply(a)));
            im.locate(image).ok_or_else(|| Error::NotAFrameMap("image is not an ideal".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    FrameMap::new(il.frame.clone(), im.frame.clone(), values)
}

/// Posets given by strict up-sets `above[i]`, extended by one new maximal
/// element whose strict down-set is any down-set of the old poset.
fn extend_posets(max_downsets: usize) -> Vec<Vec<Mask>> {
    let mut seen: HashSet<Vec<Mask>> = HashSet::new();
    let mut layer: Vec<Vec<Mask>> = vec![Vec::new()];
    let mut all = vec![Vec::new()];
    seen.insert(Vec::new());
    while !layer.is_empty() {
        let mut next = Vec::new();
        for poset in &layer {
            let n = poset.len();
            for d in downsets(poset) {
                let mut extended: Vec<Mask> = poset.clone();
                for x in bits::members(d) {
                    extended[x] |= bits::singleton(n);
                }
                extended.push(0);
                if downsets(&extended).len() > max_downsets {
                    continue;
                }
                let canonical = canonical_poset(&extended);
                if seen.insert(canonical.clone()) {
                    next.push(canonical.clone());
                    all.push(canonical);
                }
            }
        }
        layer = next;
    }
    all
}

fn downsets(above: &[Mask]) -> Vec<Mask> {
    let n = above.len();
    bits::submasks(bits::full(n))
        .filter(|&d| (0..n).all(|x| bits::contains(d, x) || above[x] & d == 0))
        .collect()
}

/// Lexicographically least relabelling of a poset.
fn canonical_poset(above: &[Mask]) -> Vec<Mask> {
    let n = above.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<Mask>> = None;
    loop {
        let mut relabelled = vec![0; n];
        for x in 0..n {
            relabelled[perm[x]] = bits::members(above[x]).fold(0, |acc, y| acc | bits::singleton(perm[y]));
        }
        if best.as_ref().is_none_or(|b| relabelled < *b) {
            best = Some(relabelled);
        }
        if !next_permutation(&mut perm) {
            return best.expect("at least one permutation");
        }
    }
}

/// Down-set lattice of a poset, elements in ascending mask order.
fn downset_lattice(above: &[Mask]) -> FiniteFrame {
    FiniteFrame::from_family(&downsets(above)).expect("down-sets form a distributive lattice")
}

/// One representative of every distributive lattice with at most
/// `max_elements` elements, ordered by size.
pub fn distributive_lattices(max_elements: usize) -> Result<Vec<FiniteFrame>> {
    if max_elements > MAX_ELEMENTS {
        return Err(Error::BoundExceeded(format!("lattices of {max_elements} elements (max {MAX_ELEMENTS})")));
    }
    if max_elements == 0 {
        return Ok(Vec::new());
    }
    let mut posets = extend_posets(max_elements);
    posets.sort_by_key(|p| (downsets(p).len(), p.clone()));
    Ok(posets.iter().map(|p| downset_lattice(p)).collect())
}
