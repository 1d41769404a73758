//! Brute-force recounts checked against the library's enumerations.

use std::collections::BTreeSet;

use topolab::corpus::enumerate_spaces;
use topolab::filters::{enumerate_filters, FilterKind};
use topolab::frame::distributive_lattices;
use topolab::map::{enumerate_continuous_maps, ContinuousMap};
use topolab::FiniteSpace;

/// Every family of subsets of `n` points closed under union and
/// intersection that contains the empty set and the whole set.
fn topologies_by_families(n: usize) -> Vec<Vec<u64>> {
    let full = (1u64 << n) - 1;
    let middle: Vec<u64> = (1..full).collect();
    let mut out = Vec::new();
    for choice in 0u64..(1 << middle.len()) {
        let mut fam = vec![0, full];
        fam.extend(middle.iter().enumerate().filter(|(i, _)| choice >> i & 1 == 1).map(|(_, &m)| m));
        let set: BTreeSet<u64> = fam.iter().copied().collect();
        let closed = fam.iter().all(|&a| fam.iter().all(|&b| set.contains(&(a | b)) && set.contains(&(a & b))));
        if closed {
            out.push(set.into_iter().collect());
        }
    }
    out.sort();
    out
}

fn permute(mask: u64, perm: &[usize]) -> u64 {
    (0..perm.len()).filter(|&i| mask >> i & 1 == 1).fold(0, |acc, i| acc | 1 << perm[i])
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

fn class_count(n: usize, families: &[Vec<u64>]) -> usize {
    let perms = permutations(n);
    let canon: BTreeSet<Vec<u64>> = families
        .iter()
        .map(|fam| {
            perms
                .iter()
                .map(|p| {
                    let mut image: Vec<u64> = fam.iter().map(|&m| permute(m, p)).collect();
                    image.sort();
                    image
                })
                .min()
                .unwrap()
        })
        .collect();
    canon.len()
}

#[test]
fn labeled_topologies_match_family_search() {
    for (n, expected) in [(1, 1), (2, 4), (3, 29), (4, 355)] {
        let families = topologies_by_families(n);
        assert_eq!(families.len(), expected);
        let mut listed: Vec<Vec<u64>> = enumerate_spaces(n, false).unwrap().iter().map(|x| x.opens().to_vec()).collect();
        listed.sort();
        assert_eq!(listed, families, "n = {n}");
    }
}

#[test]
fn homeomorphism_classes_match_relabelling() {
    for (n, expected) in [(1, 1), (2, 3), (3, 9), (4, 33)] {
        let families = topologies_by_families(n);
        assert_eq!(class_count(n, &families), expected);
        assert_eq!(enumerate_spaces(n, true).unwrap().len(), expected, "n = {n}");
    }
}

fn prime_filters_by_families(lattice: &[u64]) -> BTreeSet<Vec<u64>> {
    let mut out = BTreeSet::new();
    for choice in 1u64..(1 << lattice.len()) {
        let fam: Vec<u64> = lattice.iter().enumerate().filter(|(i, _)| choice >> i & 1 == 1).map(|(_, &m)| m).collect();
        let has = |m: u64| fam.contains(&m);
        let proper = !has(0);
        let upward = fam.iter().all(|&a| lattice.iter().all(|&b| a & !b != 0 || has(b)));
        let meets = fam.iter().all(|&a| fam.iter().all(|&b| has(a & b)));
        let prime = lattice.iter().all(|&a| lattice.iter().all(|&b| !lattice.contains(&(a | b)) || !has(a | b) || has(a) || has(b)));
        if proper && upward && meets && prime {
            out.insert(fam);
        }
    }
    out
}

fn listed_filters(kind: FilterKind, x: &FiniteSpace) -> BTreeSet<Vec<u64>> {
    enumerate_filters(kind, x)
        .iter()
        .map(|f| {
            let mut e = f.elements().to_vec();
            e.sort();
            e
        })
        .collect()
}

#[test]
fn open_and_closed_prime_filters_match_family_search() {
    for n in 1..=3 {
        for x in enumerate_spaces(n, false).unwrap() {
            let opens = x.opens().to_vec();
            let mut closeds = x.closeds();
            closeds.sort();
            assert_eq!(listed_filters(FilterKind::OpenPrime, &x), prime_filters_by_families(&opens), "{x:?}");
            assert_eq!(listed_filters(FilterKind::ClosedPrime, &x), prime_filters_by_families(&closeds), "{x:?}");
        }
    }
}

#[test]
fn ultrafilters_match_family_search() {
    for n in 1..=2 {
        for x in enumerate_spaces(n, false).unwrap() {
            let all: Vec<u64> = (0..1u64 << n).collect();
            assert_eq!(listed_filters(FilterKind::Ultra, &x), prime_filters_by_families(&all));
        }
    }
}

fn monotone(x: &FiniteSpace, y: &FiniteSpace, f: &[usize]) -> bool {
    let (sx, sy) = (x.specialization(), y.specialization());
    (0..x.len()).all(|a| (0..x.len()).all(|b| !sx.le(a, b) || sy.le(f[a], f[b])))
}

#[test]
fn continuous_maps_are_the_monotone_functions() {
    let spaces: Vec<FiniteSpace> = (1..=3).flat_map(|n| enumerate_spaces(n, true).unwrap()).collect();
    for x in &spaces {
        for y in &spaces {
            let total = y.len().pow(x.len() as u32);
            let mut expected = Vec::new();
            for code in 0..total {
                let f: Vec<usize> = (0..x.len()).map(|i| code / y.len().pow(i as u32) % y.len()).collect();
                let accepted = ContinuousMap::new(x.clone(), y.clone(), f.clone()).is_ok();
                assert_eq!(accepted, monotone(x, y, &f), "{f:?}");
                if accepted {
                    expected.push(f);
                }
            }
            let mut listed: Vec<Vec<usize>> = enumerate_continuous_maps(x, y).iter().map(|m| m.values().to_vec()).collect();
            listed.sort();
            expected.sort();
            assert_eq!(listed, expected);
        }
    }
}

/// Distributive lattices on `k` elements with `0` bottom, `k - 1` top and
/// every strict relation `i < j` between indices `i < j`, up to
/// isomorphism.
fn distributive_lattice_count(k: usize) -> usize {
    if k <= 2 {
        return 1;
    }
    let pairs: Vec<(usize, usize)> = (1..k - 1).flat_map(|i| (i + 1..k - 1).map(move |j| (i, j))).collect();
    let perms = permutations(k - 2);
    let mut seen = BTreeSet::new();
    for choice in 0u64..(1 << pairs.len()) {
        let mut le = vec![vec![false; k]; k];
        for a in 0..k {
            le[a][a] = true;
            le[0][a] = true;
            le[a][k - 1] = true;
        }
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            le[i][j] = choice >> bit & 1 == 1;
        }
        let transitive = (0..k).all(|a| (0..k).all(|b| !le[a][b] || (0..k).all(|c| !le[b][c] || le[a][c])));
        if !transitive {
            continue;
        }
        let bound = |a: usize, b: usize, up: bool| -> Option<usize> {
            let cands: Vec<usize> = (0..k).filter(|&c| if up { le[a][c] && le[b][c] } else { le[c][a] && le[c][b] }).collect();
            cands.iter().copied().find(|&c| cands.iter().all(|&d| if up { le[c][d] } else { le[d][c] }))
        };
        let mut join = vec![vec![0; k]; k];
        let mut meet = vec![vec![0; k]; k];
        let mut lattice = true;
        for a in 0..k {
            for b in 0..k {
                match (bound(a, b, true), bound(a, b, false)) {
                    (Some(j), Some(m)) => {
                        join[a][b] = j;
                        meet[a][b] = m;
                    }
                    _ => lattice = false,
                }
            }
        }
        if !lattice {
            continue;
        }
        let distributive =
            (0..k).all(|a| (0..k).all(|b| (0..k).all(|c| meet[a][join[b][c]] == join[meet[a][b]][meet[a][c]])));
        if !distributive {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let at = |i: usize| if i == 0 || i == k - 1 { i } else { p[i - 1] + 1 };
                let mut rel = vec![false; k * k];
                for a in 0..k {
                    for b in 0..k {
                        rel[at(a) * k + at(b)] = le[a][b];
                    }
                }
                rel
            })
            .min()
            .unwrap();
        seen.insert(canon);
    }
    seen.len()
}

#[test]
fn distributive_lattice_counts_match_order_search() {
    let lattices = distributive_lattices(8).unwrap();
    for k in 1..=8 {
        let listed = lattices.iter().filter(|l| l.len() == k).count();
        assert_eq!(listed, distributive_lattice_count(k), "k = {k}");
    }
}
