//! The hand-written Jacobi oracle against nalgebra's symmetric eigensolver.

use nalgebra::DMatrix;
use proptest::prelude::*;

use rdspectra::{
    cayley_power_graph, rd_alpha_matrix, spectra_equal, sym_eigenvalues_default, GroupSpec, Spectrum, SymMatrix,
};

fn reference(m: &SymMatrix) -> Spectrum {
    let n = m.order();
    let dm = DMatrix::from_fn(n, n, |i, j| m.get(i, j));
    Spectrum::from_values(dm.symmetric_eigenvalues().iter().copied())
}

fn symmetric(max: usize) -> impl Strategy<Value = SymMatrix> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(-10.0f64..10.0, n * n)
            .prop_map(move |v| SymMatrix::from_fn(n, |i, j| v[i.min(j) * n + i.max(j)]))
    })
}

proptest! {
    #[test]
    fn jacobi_agrees_with_nalgebra(m in symmetric(12)) {
        let r = spectra_equal(&sym_eigenvalues_default(&m).unwrap(), &reference(&m), 1e-8);
        prop_assert!(r.equal, "max deviation {:e}", r.max_deviation);
    }

    #[test]
    fn trace_is_eigenvalue_sum(m in symmetric(10)) {
        let s = sym_eigenvalues_default(&m).unwrap();
        prop_assert!((s.trace() - m.trace()).abs() < 1e-8 * m.frobenius_norm().max(1.0));
    }
}

#[test]
fn power_graph_spectra_agree() {
    for spec in ["cyclic:30", "dihedral:12", "quaternion:6", "elemab:3,2", "pq:3,7"] {
        let spec: GroupSpec = spec.parse().unwrap();
        let (g, _) = cayley_power_graph(&spec).unwrap();
        for alpha in [0.0, 0.5, 1.0] {
            let m = rd_alpha_matrix(&g, alpha).unwrap();
            let r = spectra_equal(&sym_eigenvalues_default(&m).unwrap(), &reference(&m), 1e-8);
            assert!(r.equal, "{spec} alpha={alpha}: {:e}", r.max_deviation);
        }
    }
}
