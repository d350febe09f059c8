use std::time::Instant;

use belab_algebra::resolution::{betti_from_frame, frame_ranks, free_resolution_frame, minimize, Budgets, Resolution};
use belab_algebra::{binomial_edge_ideal, MonOrder, PolyRing};
use belab_core::Graph;

fn whiskered(k: usize, r: &[usize]) -> Graph {
    let mut g = Graph::cycle(k).unwrap();
    for (v, &c) in r.iter().enumerate() {
        if c > 0 {
            g = g.add_whiskers(v + 1, c).unwrap();
        }
    }
    g
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let order: MonOrder = args.get(1).map(|s| s.parse().unwrap()).unwrap_or_default();
    let do_min = args.get(2).is_some_and(|s| s == "min");
    let graphs = vec![
        ("K3", Graph::complete(3).unwrap()),
        ("C4", Graph::cycle(4).unwrap()),
        ("C5", Graph::cycle(5).unwrap()),
        ("C6", Graph::cycle(6).unwrap()),
        ("C5 r=(2,0,0,0,1)", whiskered(5, &[2, 0, 0, 0, 1])),
        ("C5 r=(2,1,0,0,1)", whiskered(5, &[2, 1, 0, 0, 1])),
        ("C5 r=(2,0,1,0,1)", whiskered(5, &[2, 0, 1, 0, 1])),
        ("C5 r=(2,1,1,1,1)", whiskered(5, &[2, 1, 1, 1, 1])),
    ];
    for (name, g) in graphs {
        let ring = PolyRing::new(g.n(), 32003, order).unwrap();
        let mut ideal = binomial_edge_ideal(&g, &ring).unwrap();
        let t = Instant::now();
        let frame = free_resolution_frame(&mut ideal, Budgets::default()).unwrap();
        let t_frame = t.elapsed();
        let bt = betti_from_frame(&frame);
        let t_betti = t.elapsed();
        println!("{name}: gb {} frame {} ({:?}) betti ({:?}) pd {} reg {} totals {:?}", ideal.cached_gb().unwrap().len(), frame.size(), t_frame, t_betti, bt.pd(), bt.reg(), (0..=bt.pd()).map(|i| bt.total(i)).collect::<Vec<_>>());
        let fr = frame_ranks(&frame);
        println!("   frame totals {:?}", (0..=fr.pd()).map(|i| fr.total(i)).collect::<Vec<_>>());
        if do_min {
            let t = Instant::now();
            let res = Resolution::from_frame(&frame);
            let m = minimize(&res);
            println!("   minimized in {:?}, agree {}", t.elapsed(), m.ranks() == bt);
            let t = Instant::now();
            m.check().unwrap();
            println!("   checked in {:?}", t.elapsed());
        }
        print!("{bt}");
    }
}
