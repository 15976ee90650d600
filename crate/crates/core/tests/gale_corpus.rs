use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use galekit::alternation::{AltMode, Bijection};
use galekit::gale::{corollary_configuration, verify_auto, verify_exact, verify_sampled, EXACT_MAX_DIM};
use galekit::hypergraph::{complete_k_uniform, schrijver_k_uniform, Hypergraph, VertexSet};

fn corpus() -> Vec<Hypergraph> {
    let mut out = Vec::new();
    for n in 2..=7 {
        for k in 1..=n / 2 {
            out.push(complete_k_uniform(n, k).unwrap());
            out.push(schrijver_k_uniform(n, k).unwrap());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..40 {
        let n = rng.gen_range(2..=8);
        let edges = (0..rng.gen_range(1..=6))
            .map(|_| {
                let mut e = VertexSet::EMPTY;
                for _ in 0..rng.gen_range(1..=3) {
                    e.insert(rng.gen_range(0..n));
                }
                e
            })
            .collect::<std::collections::BTreeSet<_>>();
        out.push(Hypergraph::on_range(n, edges.into_iter().collect()).unwrap());
    }
    out
}

#[test]
fn every_configuration_verifies() {
    let mut exact_runs = 0;
    for h in corpus() {
        let n = h.vertex_count();
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let mut images: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            images.swap(i, rng.gen_range(0..=i));
        }
        for sigma in [Bijection::identity(n), Bijection::new(images.clone()).unwrap()] {
            for mode in [AltMode::Alt, AltMode::Salt] {
                // alternation n leaves no room for a configuration
                let Ok(c) = corollary_configuration(&h, &sigma, mode) else {
                    continue;
                };
                let auto = verify_auto(&c.config, &c.property, 2000, 5).unwrap();
                assert!(auto.ok, "{h:?} {mode} {sigma:?}: {:?}", auto.counterexample);
                if c.d <= EXACT_MAX_DIM {
                    let exact = verify_exact(&c.config, &c.property).unwrap();
                    let sampled = verify_sampled(&c.config, &c.property, 2000, 5).unwrap();
                    assert_eq!(exact.ok, sampled.ok);
                    exact_runs += 1;
                }
            }
        }
    }
    assert!(exact_runs > 50);
}
