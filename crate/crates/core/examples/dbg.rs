use hyperent_core::concurrence::{concurrence_pair, Method};
use hyperent_core::{Hyperedge, Hypergraph};

fn main() {
    let g = Hypergraph::new(
        7,
        [Hyperedge::EMPTY, Hyperedge::from_vertices([1u32, 2, 3, 4]).unwrap()],
    )
    .unwrap();
    for i in 1..=7u32 {
        for j in (i + 1)..=7 {
            let a = concurrence_pair(&g, i, j, Method::Combinatorial).unwrap();
            let b = concurrence_pair(&g, i, j, Method::Oracle).unwrap();
            if (a.value - b.value).abs() > 1e-12 {
                println!(
                    "pair ({i},{j}): comb {:.15e} oracle {:.15e} diff {:.3e}",
                    a.value,
                    b.value,
                    (a.value - b.value).abs()
                );
                println!("  comb mags  {:?}", a.sqrt_eigs);
                println!("  oracle mags {:?}", b.sqrt_eigs);
            }
        }
    }
    println!("done");
}
