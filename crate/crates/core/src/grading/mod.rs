//! Commutator supports, the decompositions used in the strongness proof,
//! and certificates that the grading by relative root subgroups is strong.

mod certificate;
mod decompose;
mod mutate;
mod support;
mod verify;

pub use certificate::{
    certify_strong, BorelEntry, CoreRootProof, Delegation, Generator, Placement, Proof, Step,
    StrongGradingCertificate, SystemDescriptor, DELEGATION_REASON,
};
pub use decompose::{nc_decompose, ChamberContext, Decomposition};
pub use mutate::{mutation_report, single_field_mutations, MutationReport};
pub use support::{
    abc_generator_sets, commutator_support, grading_axioms_check, AbcSets, AxiomReport, CommutatorSupport,
    GeneratorSet, DEFAULT_SUPPORT_BOUND,
};
pub use verify::{verify_certificate, Rejection};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borel::{enumerate_borel_subsets, Strategy};
    use crate::relroot::tests::folded;
    use crate::rootsys::Series;
    use crate::{Error, GammaLabel};

    #[test]
    fn bc2_round_trip_and_mutations() {
        let rel = folded(Series::A, 4, GammaLabel::Flip, None);
        let fam = enumerate_borel_subsets(&rel, Strategy::Projection).unwrap();
        let cert = certify_strong(&rel, &fam).unwrap();
        assert_eq!(cert.borel.len(), 8);
        verify_certificate(&cert, &rel, &fam).unwrap();
        let rep = mutation_report(&cert, &rel, &fam);
        assert!(rep.total > 100);
        assert!(rep.all_rejected(), "accepted: {:?}", &rep.accepted[..rep.accepted.len().min(10)]);
    }

    #[test]
    fn bc1_is_not_regular() {
        let rel = folded(Series::A, 2, GammaLabel::Flip, None);
        let fam = enumerate_borel_subsets(&rel, Strategy::Projection).unwrap();
        assert!(matches!(certify_strong(&rel, &fam), Err(Error::NotRegular(_))));
    }

    #[test]
    fn triality_is_delegated() {
        let rel = folded(Series::D, 4, GammaLabel::Triality, None);
        let fam = enumerate_borel_subsets(&rel, Strategy::Projection).unwrap();
        let cert = certify_strong(&rel, &fam).unwrap();
        assert_eq!(cert.delegations.len(), 1);
        let proofs: Vec<&CoreRootProof> = cert.borel.iter().flat_map(|e| &e.core).collect();
        assert!(!proofs.is_empty());
        assert!(proofs.iter().all(|p| matches!(p.proof, Proof::Delegated { .. })));
        verify_certificate(&cert, &rel, &fam).unwrap();
    }
}
