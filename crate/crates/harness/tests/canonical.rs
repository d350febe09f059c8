use belab::cache::cache_key;
use belab::enumerate::{enumerate_unicyclic, enumerate_whiskered_cycles};
use belab_algebra::MonOrder;
use belab_core::canon::canonical_form;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

#[test]
fn random_relabellings_share_form_and_cache_key() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut classes = enumerate_unicyclic(7, 3, 7).unwrap();
    classes.extend(enumerate_whiskered_cycles(5, 3).unwrap());
    for case in &classes {
        let g = &case.graph;
        let base = canonical_form(g).unwrap();
        let key = cache_key(&base.hash(), 32003, MonOrder::Degrevlex);
        let mut perm: Vec<usize> = (1..=g.n()).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            let cf = canonical_form(&g.relabel(&perm).unwrap()).unwrap();
            assert_eq!(cf.graph, base.graph, "{}", case.recipe);
            assert_eq!(cache_key(&cf.hash(), 32003, MonOrder::Degrevlex), key);
        }
    }
}

#[test]
fn distinct_classes_have_distinct_keys() {
    let classes = enumerate_unicyclic(8, 3, 8).unwrap();
    let mut keys: Vec<String> = classes.iter().map(|c| canonical_form(&c.graph).unwrap().hash()).collect();
    keys.sort();
    keys.dedup();
    assert_eq!(keys.len(), classes.len());
}
