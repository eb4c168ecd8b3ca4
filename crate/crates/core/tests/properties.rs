//! Randomized properties over orientations of small Dynkin quivers.

mod common;

use proptest::prelude::*;

use cluster_poset::cluster::{ClusterCategory, ClusterIndec};
use cluster_poset::functors::BgpPair;
use cluster_poset::Quiver;

use common::{type_a, type_d4};

fn quivers() -> Vec<Quiver> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.extend(type_a(n));
    }
    out.extend(type_d4());
    out
}

fn any_quiver() -> impl Strategy<Value = Quiver> {
    proptest::sample::select(quivers())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cluster_ext_is_symmetric(q in any_quiver(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let cat = ClusterCategory::new(&q).unwrap();
        let indecs = cat.indecomposables();
        let (x, y) = (a.get(indecs), b.get(indecs));
        prop_assert_eq!(cat.ext1_cluster(x, y).unwrap(), cat.ext1_cluster(y, x).unwrap());
        if let (ClusterIndec::Shifted(_), ClusterIndec::Shifted(_)) = (x, y) {
            prop_assert_eq!(cat.ext1_cluster(x, y).unwrap(), 0);
        }
    }

    #[test]
    fn mutation_is_an_involution(q in any_quiver(), t in any::<prop::sample::Index>(), s in any::<prop::sample::Index>()) {
        let cat = ClusterCategory::new(&q).unwrap();
        let objects = cat.enumerate().unwrap();
        let t = t.get(objects);
        let m = s.get(t.summands());
        let t2 = cat.mutate(t, m).unwrap();
        prop_assert!(!t2.contains(m));
        let new: Vec<&ClusterIndec> = t2.summands().iter().filter(|c| !t.contains(c)).collect();
        prop_assert_eq!(new.len(), 1);
        prop_assert_eq!(&cat.mutate(&t2, new[0]).unwrap(), t);
    }

    #[test]
    fn rho_is_a_bijection(q in any_quiver(), pick in any::<prop::sample::Index>()) {
        let sinks = q.sinks();
        let x = *pick.get(&sinks);
        let cat = ClusterCategory::new(&q).unwrap();
        let cat2 = ClusterCategory::new(&q.reflect(x).unwrap()).unwrap();
        let pair = BgpPair::new(&cat, &cat2, x).unwrap();
        let mut images: Vec<_> = cat.enumerate().unwrap().iter().map(|t| pair.rho(t).unwrap()).collect();
        for (t, r) in cat.enumerate().unwrap().iter().zip(&images) {
            prop_assert_eq!(&pair.rho_inv(r).unwrap(), t);
        }
        images.sort();
        prop_assert_eq!(images.as_slice(), cat2.enumerate().unwrap());
    }

    #[test]
    fn fingerprints_order_by_inclusion(q in any_quiver(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let cat = ClusterCategory::new(&q).unwrap();
        let objects = cat.enumerate().unwrap();
        let (s, t) = (a.get(objects), b.get(objects));
        let (fs, ft) = (cat.fac_fingerprint(s).unwrap(), cat.fac_fingerprint(t).unwrap());
        prop_assert_eq!(cat.leq(s, t).unwrap(), fs.is_superset(&ft));
        prop_assert!(fs.0.iter().all(|d| cat.positive_roots().contains(d)));
        if fs == ft {
            prop_assert_eq!(s, t);
        }
    }
}
