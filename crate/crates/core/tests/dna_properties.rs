use dnacodes::dna::{self, DnaString};
use dnacodes::hamming;
use proptest::prelude::*;

fn all_strings(n: usize) -> impl Iterator<Item = DnaString> {
    (0..1usize << (2 * n)).map(move |idx| {
        let v: Vec<u8> = (0..n).map(|p| (idx >> (2 * p) & 3) as u8).collect();
        DnaString::from_indices(&v).unwrap()
    })
}

fn h(x: &DnaString, y: &DnaString) -> usize {
    hamming(x.bases(), y.bases()).unwrap()
}

#[test]
fn distance_identities_up_to_length_4() {
    for n in 1..=4 {
        let all: Vec<DnaString> = all_strings(n).collect();
        for x in &all {
            for y in &all {
                assert_eq!(h(x, &y.reverse()), h(&x.reverse(), y));
                assert_eq!(h(x, &y.complement()), h(&x.complement(), y));
                let rc = h(x, &y.reverse_complement());
                assert_eq!(rc, h(&x.reverse_complement(), y));
                assert_eq!(rc, h(&x.reverse(), &y.complement()));
            }
        }
    }
}

#[test]
fn gc_weight_is_invariant_under_the_three_operations() {
    for n in 1..=6 {
        for x in all_strings(n) {
            let w = x.gc_weight();
            assert_eq!(w, x.reverse().gc_weight());
            assert_eq!(w, x.complement().gc_weight());
            assert_eq!(w, x.reverse_complement().gc_weight());
        }
    }
}

#[test]
fn tandem_freedom_is_closed_under_reverse_and_complement() {
    for n in 1..=8 {
        for x in all_strings(n) {
            for l in 1..=3 {
                let t = dna::is_tandem_free(&x, l);
                assert_eq!(t, dna::is_tandem_free(&x.reverse(), l), "{x} l={l}");
                assert_eq!(t, dna::is_tandem_free(&x.complement(), l), "{x} l={l}");
                assert_eq!(t, dna::is_tandem_free(&x.reverse_complement(), l), "{x} l={l}");
            }
        }
    }
}

#[test]
fn complements_are_secondary_complements() {
    for n in 1..=5 {
        for x in all_strings(n) {
            assert!(dna::is_secondary_complement_pair(&x, &x.complement()).unwrap());
            // x^rc read backwards pairs position by position with x.
            assert!(dna::is_secondary_complement_pair(&x, &x.reverse_complement().reverse()).unwrap());
        }
    }
}

#[test]
fn homopolymer_runs_match_tandem_freedom_at_one() {
    for n in 1..=6 {
        for x in all_strings(n) {
            assert_eq!(dna::has_homopolymer_run(&x, 2), !dna::is_tandem_free(&x, 1));
        }
    }
}

fn dna_string(max: usize) -> impl Strategy<Value = DnaString> {
    prop::collection::vec(0u8..4, 1..=max).prop_map(|v| DnaString::from_indices(&v).unwrap())
}

proptest! {
    #[test]
    fn reverse_and_complement_are_involutions(x in dna_string(40)) {
        prop_assert_eq!(x.reverse().reverse(), x.clone());
        prop_assert_eq!(x.complement().complement(), x.clone());
        prop_assert_eq!(x.reverse_complement(), x.complement().reverse());
    }

    #[test]
    fn free_energy_is_nonpositive_and_reverse_symmetric(x in dna_string(30)) {
        let e = dna::min_free_energy(&x);
        prop_assert!(e <= 0);
        prop_assert_eq!(e, dna::min_free_energy(&x.reverse()));
    }

    #[test]
    fn parse_display_round_trip(x in dna_string(50)) {
        let back: DnaString = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn correlation_has_length_of_first_word(x in dna_string(12), y in dna_string(12)) {
        let c = dna::correlation(&x, &y);
        prop_assert_eq!(c.len(), x.len());
        prop_assert_eq!(c[0] == 1, x.bases()[..x.len().min(y.len())] == y.bases()[..x.len().min(y.len())]);
    }

    #[test]
    fn stem_free_at_l_implies_stem_free_at_l_plus_one(x in dna_string(20), l in 1usize..5) {
        if dna::is_l_free_secondary(&x, l) {
            prop_assert!(dna::is_l_free_secondary(&x, l + 1));
        }
    }
}
