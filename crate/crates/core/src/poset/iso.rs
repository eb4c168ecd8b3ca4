//! Order isomorphism by backtracking over invariant classes.

use std::collections::BTreeMap;

use super::FinitePoset;

/// Does `map` (index in `p` -> index in `q`) define an order isomorphism?
pub fn is_order_isomorphism<A, B>(p: &FinitePoset<A>, q: &FinitePoset<B>, map: &[usize]) -> bool {
    let n = p.len();
    if q.len() != n || map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &m in map {
        if m >= n || std::mem::replace(&mut hit[m], true) {
            return false;
        }
    }
    (0..n).all(|a| (0..n).all(|b| p.le(a, b) == q.le(map[a], map[b])))
}

pub fn are_isomorphic<A, B>(p: &FinitePoset<A>, q: &FinitePoset<B>) -> bool {
    find_isomorphism(p, q).is_some()
}

/// Per-element structural data that every order isomorphism preserves.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Signature {
    below: usize,
    above: usize,
    lower_covers: usize,
    upper_covers: usize,
    height: usize,
    depth: usize,
}

fn signatures<K>(p: &FinitePoset<K>, covers: &[(usize, usize)]) -> Vec<Signature> {
    let n = p.len();
    let mut height = vec![0usize; n];
    let mut depth = vec![0usize; n];
    // elements sorted by number of predecessors form a linear extension
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| (0..n).filter(|&b| p.le(b, a)).count());
    for &b in &order {
        for &(a, c) in covers {
            if c == b {
                height[b] = height[b].max(height[a] + 1);
            }
        }
    }
    for &b in order.iter().rev() {
        for &(a, c) in covers {
            if a == b {
                depth[b] = depth[b].max(depth[c] + 1);
            }
        }
    }
    (0..n)
        .map(|a| Signature {
            below: (0..n).filter(|&b| p.le(b, a)).count(),
            above: (0..n).filter(|&b| p.le(a, b)).count(),
            lower_covers: covers.iter().filter(|&&(_, c)| c == a).count(),
            upper_covers: covers.iter().filter(|&&(b, _)| b == a).count(),
            height: height[a],
            depth: depth[a],
        })
        .collect()
}

/// Colour refinement run jointly on both posets so colour ids are shared.
fn refine(
    sig_p: &[Signature],
    covers_p: &[(usize, usize)],
    sig_q: &[Signature],
    covers_q: &[(usize, usize)],
) -> (Vec<usize>, Vec<usize>) {
    fn ids(keys_p: &[Vec<usize>], keys_q: &[Vec<usize>]) -> (Vec<usize>, Vec<usize>) {
        let mut table = BTreeMap::new();
        for k in keys_p.iter().chain(keys_q) {
            let next = table.len();
            table.entry(k.clone()).or_insert(next);
        }
        (keys_p.iter().map(|k| table[k]).collect(), keys_q.iter().map(|k| table[k]).collect())
    }
    let initial = |sig: &[Signature]| -> Vec<Vec<usize>> {
        sig.iter().map(|s| vec![s.below, s.above, s.lower_covers, s.upper_covers, s.height, s.depth]).collect()
    };
    let (mut cp, mut cq) = ids(&initial(sig_p), &initial(sig_q));
    loop {
        let step = |colours: &[usize], covers: &[(usize, usize)]| -> Vec<Vec<usize>> {
            (0..colours.len())
                .map(|a| {
                    let mut down: Vec<usize> =
                        covers.iter().filter(|&&(_, c)| c == a).map(|&(b, _)| colours[b]).collect();
                    let mut up: Vec<usize> =
                        covers.iter().filter(|&&(b, _)| b == a).map(|&(_, c)| colours[c]).collect();
                    down.sort_unstable();
                    up.sort_unstable();
                    let mut key = vec![colours[a], usize::MAX];
                    key.extend(down);
                    key.push(usize::MAX);
                    key.extend(up);
                    key
                })
                .collect()
        };
        let (np, nq) = ids(&step(&cp, covers_p), &step(&cq, covers_q));
        let classes = |c: &[usize]| c.iter().collect::<std::collections::BTreeSet<_>>().len();
        let stable = classes(&np) == classes(&cp) && classes(&nq) == classes(&cq);
        cp = np;
        cq = nq;
        if stable {
            return (cp, cq);
        }
    }
}

/// Finds an order isomorphism `p -> q` if one exists.
pub fn find_isomorphism<A, B>(p: &FinitePoset<A>, q: &FinitePoset<B>) -> Option<Vec<usize>> {
    let n = p.len();
    if q.len() != n {
        return None;
    }
    let covers_p = p.hasse();
    let covers_q = q.hasse();
    if covers_p.len() != covers_q.len() {
        return None;
    }
    let sig_p = signatures(p, &covers_p);
    let sig_q = signatures(q, &covers_q);
    let mut sp = sig_p.clone();
    let mut sq = sig_q.clone();
    sp.sort();
    sq.sort();
    if sp != sq {
        return None;
    }
    let (colour_p, colour_q) = refine(&sig_p, &covers_p, &sig_q, &covers_q);
    let mut hp = colour_p.clone();
    let mut hq = colour_q.clone();
    hp.sort_unstable();
    hq.sort_unstable();
    if hp != hq {
        return None;
    }

    // assign elements of p in a connected-ish order: linear extension, so
    // every new element already has its lower covers placed
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| (sig_p[a].height, sig_p[a].below, a));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(p, q, &order, 0, &colour_p, &colour_q, &mut map, &mut used) {
        debug_assert!(is_order_isomorphism(p, q, &map));
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend<A, B>(
    p: &FinitePoset<A>,
    q: &FinitePoset<B>,
    order: &[usize],
    depth: usize,
    colour_p: &[usize],
    colour_q: &[usize],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&a) = order.get(depth) else {
        return true;
    };
    for b in 0..q.len() {
        if used[b] || colour_q[b] != colour_p[a] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&c| {
            let d = map[c];
            p.le(a, c) == q.le(b, d) && p.le(c, a) == q.le(d, b)
        });
        if !consistent {
            continue;
        }
        map[a] = b;
        used[b] = true;
        if extend(p, q, order, depth + 1, colour_p, colour_q, map, used) {
            return true;
        }
        used[b] = false;
        map[a] = usize::MAX;
    }
    false
}
