use dnacodes::verify::{self, Constraint};
use dnacodes::{Alphabet, Codebook, Format};
use proptest::prelude::*;

fn dna_code(max_n: usize, max_m: usize) -> impl Strategy<Value = Codebook> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::btree_set(prop::collection::vec(0u8..4, n), 1..=max_m)
            .prop_map(|set| Codebook::new(Alphabet::Dna, set.into_iter().collect()).unwrap())
    })
}

fn code_over(alphabet: Alphabet) -> impl Strategy<Value = Codebook> {
    let q = alphabet.size();
    (1usize..8).prop_flat_map(move |n| {
        prop::collection::btree_set(prop::collection::vec(0..q, n), 1..20)
            .prop_map(move |set| Codebook::new(alphabet, set.into_iter().collect()).unwrap())
    })
}

fn any_code() -> impl Strategy<Value = Codebook> {
    prop_oneof![
        code_over(Alphabet::Dna),
        code_over(Alphabet::Binary),
        code_over(Alphabet::RingR),
        code_over(Alphabet::Quinary),
    ]
}

proptest! {
    #[test]
    fn code_passes_hamming_at_its_own_distance(c in dna_code(8, 30)) {
        prop_assume!(c.len() >= 2);
        let d = verify::min_hamming_distance(&c).unwrap();
        let pass = verify::check_constraint(&c, Constraint::Hamming { d }).unwrap().pass;
        prop_assert!(pass);
        let fail = verify::check_constraint(&c, Constraint::Hamming { d: d + 1 }).unwrap();
        prop_assert!(!fail.pass);
        prop_assert_eq!(fail.witness.unwrap().value, Some(d as i64));
    }

    #[test]
    fn reports_ignore_input_order(c in dna_code(6, 12), seed in any::<u64>()) {
        let mut words = c.words().to_vec();
        let len = words.len();
        for i in (1..len).rev() {
            words.swap(i, (seed as usize).wrapping_add(i * 7919) % (i + 1));
        }
        let shuffled = Codebook::new(Alphabet::Dna, words).unwrap();
        let specs = verify::parse_constraints("rev:2,rc:2,gc,tandem:2,homo:3,sec:2,mu,thermo:1").unwrap();
        prop_assert_eq!(verify::verify(&c, &specs).unwrap(), verify::verify(&shuffled, &specs).unwrap());
    }

    #[test]
    fn every_failure_has_a_witness(c in dna_code(6, 12)) {
        let specs = verify::parse_constraints("rev:3,rc:3,fixedgc:2,gc,tandem:2,homo:2,sec:2,mu,thermo:0").unwrap();
        for r in verify::verify(&c, &specs).unwrap() {
            prop_assert_eq!(r.pass, r.witness.is_none(), "{}", r.constraint);
        }
    }

    #[test]
    fn export_import_round_trip(c in any_code()) {
        for format in [Format::Codebook, Format::Fasta, Format::Csv] {
            let mut buf = Vec::new();
            c.write_to(&mut buf, format).unwrap();
            let text = String::from_utf8(buf).unwrap();
            let back = Codebook::read_from(&text, format, Some(c.alphabet())).unwrap();
            prop_assert_eq!(&back, &c);
        }
    }

    #[test]
    fn constraint_tokens_round_trip(d in 0usize..20, l in 1usize..6) {
        for c in [
            Constraint::Hamming { d },
            Constraint::Reverse { d },
            Constraint::ReverseComplement { d },
            Constraint::FixedGc { w: d },
            Constraint::TandemFree { l },
            Constraint::HomopolymerFree { t: l },
            Constraint::LFreeSecondary { l },
            Constraint::GcContent,
            Constraint::MutuallyUncorrelated,
            Constraint::Thermodynamic { delta: d as f64 / 4.0 },
        ] {
            prop_assert_eq!(c.to_string().parse::<Constraint>().unwrap(), c);
        }
    }
}

#[test]
fn lexicodes_meet_their_design_distance() {
    for q in [2u8, 4] {
        for n in 1..=7 {
            for d in 1..=n {
                let c = verify::greedy_lexicode(n, d, q).unwrap();
                assert_eq!(c.len(), verify::greedy_lexicode_size(n, d, q).unwrap());
                if c.len() >= 2 {
                    assert!(verify::min_hamming_distance(&c).unwrap() >= d, "q={q} n={n} d={d}");
                }
            }
        }
    }
}

#[test]
fn binary_lexicode_sizes_match_known_values() {
    // [7,4,3] Hamming and [8,4,4] extended Hamming lexicodes.
    assert_eq!(verify::greedy_lexicode_size(7, 3, 2).unwrap(), 16);
    assert_eq!(verify::greedy_lexicode_size(8, 4, 2).unwrap(), 16);
    assert_eq!(verify::greedy_lexicode_size(3, 3, 4).unwrap(), 4);
}

#[test]
fn exact_sizes_for_tiny_lengths() {
    assert_eq!(verify::max_code_size_exact(1, 1, 4).unwrap(), 4);
    assert_eq!(verify::max_code_size_exact(2, 2, 4).unwrap(), 4);
    assert_eq!(verify::max_code_size_exact(3, 2, 4).unwrap(), 16);
    assert_eq!(verify::max_code_size_exact(3, 3, 4).unwrap(), 4);
    assert_eq!(verify::max_code_size_exact(3, 2, 2).unwrap(), 4);
}
