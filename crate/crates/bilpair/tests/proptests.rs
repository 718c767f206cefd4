//! Property tests for the structural invariants: serialization roundtrips,
//! basis-change invariance of the radical and fingerprint, the group-action
//! composition law, and the radical of a built extension.

use proptest::prelude::*;

use bilpair::cohom::{self, BilinearForm, Cocycle};
use bilpair::equiv;
use bilpair::exactlin::field::{FieldDescriptor, FieldElement};
use bilpair::exactlin::matrix::Matrix;
use bilpair::BilinearPair;

fn fp(p: u64) -> FieldDescriptor {
    FieldDescriptor::prime(p).unwrap()
}

/// A random pair of the given dimension via residue-coded structure
/// constants.
fn arb_pair(dim: usize, p: u64) -> impl Strategy<Value = BilinearPair> {
    prop::collection::vec(0..p, dim * dim * dim).prop_map(move |codes| {
        let field = fp(p);
        let mut pair = BilinearPair::zero(dim, field);
        let mut it = codes.iter();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    pair.set(i, j, k, field.from_integer(*it.next().unwrap() as i64));
                }
            }
        }
        pair
    })
}

fn arb_matrix(dim: usize, p: u64) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(0..p, dim * dim).prop_map(move |codes| {
        let field = fp(p);
        Matrix::from_fn(dim, dim, field, |i, j| {
            field.from_integer(codes[i * dim + j] as i64)
        })
    })
}

fn arb_invertible(dim: usize, p: u64) -> impl Strategy<Value = Matrix> {
    arb_matrix(dim, p).prop_filter("invertible", |m| m.is_invertible())
}

fn arb_form(dim: usize, p: u64) -> impl Strategy<Value = BilinearForm> {
    prop::collection::vec(0..p, dim * dim).prop_map(move |codes| {
        let field = fp(p);
        BilinearForm::from_flat(
            dim,
            field,
            codes.iter().map(|&c| field.from_integer(c as i64)).collect(),
        )
    })
}

proptest! {
    #[test]
    fn serialize_parse_roundtrip(pair in arb_pair(3, 5)) {
        let text = pair.serialize();
        prop_assert_eq!(BilinearPair::parse(&text).unwrap(), pair);
    }

    #[test]
    fn radical_dim_invariant_under_basis_change(
        pair in arb_pair(3, 5),
        phi in arb_invertible(3, 5),
    ) {
        let moved = pair.apply_change_of_basis(&phi).unwrap();
        prop_assert_eq!(moved.radical().dim(), pair.radical().dim());
        // The radical itself maps by φ⁻¹ (coordinates of the same vectors
        // in the new basis): membership transfers both ways.
        let rad = pair.radical();
        for r in 0..rad.dim() {
            let v = rad.basis().row_vec(r);
            let image = phi.inverse().unwrap().mul_vec(&v);
            prop_assert!(moved.radical().contains(&image));
        }
    }

    #[test]
    fn fingerprint_invariant_under_basis_change(
        pair in arb_pair(3, 5),
        phi in arb_invertible(3, 5),
    ) {
        let moved = pair.apply_change_of_basis(&phi).unwrap();
        prop_assert_eq!(
            equiv::invariant_fingerprint(&moved),
            equiv::invariant_fingerprint(&pair)
        );
    }

    #[test]
    fn action_composition_law(
        form in arb_form(3, 5),
        a in arb_matrix(3, 5),
        b in arb_matrix(3, 5),
    ) {
        // (ab)·μ evaluates μ(ab·u, ab·v), which factors through b then a.
        let via_product = cohom::act(&a.mul(&b), &form);
        let stepwise = cohom::act(&b, &cohom::act(&a, &form));
        prop_assert_eq!(via_product, stepwise);
    }

    #[test]
    fn extension_radical_matches_direct_computation(
        base in arb_pair(2, 5),
        f1 in arb_form(2, 5),
        f2 in arb_form(2, 5),
    ) {
        let theta = Cocycle::new(vec![f1, f2]);
        let predicted = cohom::radical_of_extension(&base, &theta);
        let ext = cohom::build_extension(&base, &theta);
        let actual = ext.radical();
        prop_assert_eq!(predicted.dim(), actual.dim());
        for r in 0..predicted.dim() {
            prop_assert!(actual.contains(predicted.basis().row(r)));
        }
    }

    #[test]
    fn coboundary_classes_vanish(
        base in arb_pair(2, 5),
        h in prop::collection::vec(0..5u64, 2),
    ) {
        let field = fp(5);
        let h: Vec<FieldElement> =
            h.iter().map(|&c| field.from_integer(c as i64)).collect();
        let dh = cohom::coboundary(&base, &h);
        let space = cohom::cohomology(&base);
        prop_assert!(space.class_coords(&dh).iter().all(|v| v.is_zero()));
    }
}
