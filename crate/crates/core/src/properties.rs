use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::oracle::{brute_meet, random_positive_word, random_signed_word};
use crate::perm::PairSet;
use crate::text::{format_permutation, group_form_to_word, parse_normal_form_json};
use crate::{
    equal, format_normal_form, gs_rewrite_to_fixpoint, is_normal, is_normal_pair,
    normalize_group, normalize_positive, parse_permutation, parse_word, transfer, FormStyle,
    InversionSet, Permutation, PositiveWord, SimpleBraid, Strategy,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

prop_compose! {
    fn perms(max_n: usize)(n in 1..=max_n, seed in any::<u64>()) -> (Permutation, Permutation, Permutation) {
        let mut r = rng(seed);
        (Permutation::random(n, &mut r), Permutation::random(n, &mut r), Permutation::random(n, &mut r))
    }
}

prop_compose! {
    fn positive_words(max_n: usize, max_len: usize)(n in 2..=max_n, len in 0..=max_len, seed in any::<u64>()) -> PositiveWord {
        random_positive_word(n, len, &mut rng(seed))
    }
}

prop_compose! {
    fn signed_words(max_n: usize, max_len: usize)(n in 2..=max_n, len in 1..=max_len, seed in any::<u64>()) -> crate::ArtinWord {
        random_signed_word(n, len, &mut rng(seed))
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn permutation_group_laws((p, q, r) in perms(9)) {
        let n = p.n();
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(p.compose(&Permutation::identity(n)).unwrap(), p.clone());
        prop_assert_eq!(p.flip().flip(), p);
    }

    #[test]
    fn inversion_sets_determine_permutations((p, q, _) in perms(9)) {
        let r = p.inversion_set();
        prop_assert_eq!(r.len(), p.length());
        prop_assert!(r.is_inversion_set());
        prop_assert_eq!(Permutation::from_inversions(&r).unwrap(), p.clone());
        let pq = PairSet::compose_via_inversions(&r, &p, &q.inversion_set()).unwrap();
        prop_assert_eq!(pq, p.compose(&q).unwrap().inversion_set());
    }

    #[test]
    fn pair_action_is_a_bijection((p, q, _) in perms(8)) {
        let r = q.inversion_set();
        let moved = p.act_on_pairs(&r).unwrap();
        prop_assert_eq!(moved.len(), r.len());
        prop_assert_eq!(p.inverse().act_on_pairs(&moved).unwrap(), r);
    }

    #[test]
    fn lattice_laws((p, q, r) in perms(7)) {
        let (a, b, c) = (InversionSet::of(&p), InversionSet::of(&q), InversionSet::of(&r));
        let m = a.meet(&b).unwrap();
        prop_assert_eq!(&m, &b.meet(&a).unwrap());
        prop_assert_eq!(a.meet(&a).unwrap(), a.clone());
        prop_assert!(m.leq(&a) && m.leq(&b));
        prop_assert_eq!(a.meet(&b.meet(&c).unwrap()).unwrap(), m.meet(&c).unwrap());
        let j = a.join(&b).unwrap();
        prop_assert!(a.leq(&j) && b.leq(&j));
        prop_assert_eq!(a.meet(&j).unwrap(), a.clone());
        prop_assert_eq!(j.complement(), a.complement().meet(&b.complement()).unwrap());
        if p.n() <= 5 {
            prop_assert_eq!(m, brute_meet(&a, &b).unwrap());
        }
    }

    #[test]
    fn star_and_complement((p, q, _) in perms(8)) {
        let a = SimpleBraid::new(p.clone());
        prop_assert_eq!(a.star(), InversionSet::of(&p.inverse()));
        prop_assert_eq!(a.inverse_perm().star(), a.inv().clone());
        prop_assert_eq!(a.inv().complement().complement(), a.inv().clone());
        let (x, y) = (InversionSet::of(&p), InversionSet::of(&q));
        let lower = x.meet(&y).unwrap();
        prop_assert!(x.complement().leq(&lower.complement()));
    }

    #[test]
    fn transfer_factorizes((p, q, _) in perms(8)) {
        let (a, b) = (SimpleBraid::new(p.clone()), SimpleBraid::new(q.clone()));
        let t = transfer(&a, &b).unwrap();
        prop_assert_eq!(t.head.perm().compose(t.tail.perm()).unwrap(), p.compose(&q).unwrap());
        prop_assert_eq!(t.head.len() + t.tail.len(), a.len() + b.len());
        prop_assert!(t.tail.len() >= b.len());
        prop_assert!(is_normal_pair(&t.head, &t.tail).unwrap());
        let again = transfer(&t.head, &t.tail).unwrap();
        prop_assert!(again.is_trivial());
    }

    #[test]
    fn positive_normal_form_is_sound(w in positive_words(6, 24)) {
        let f = normalize_positive(&w);
        prop_assert!(is_normal(&f));
        let word = PositiveWord::from(f.clone());
        prop_assert_eq!(word.permutation(), w.permutation());
        prop_assert_eq!(word.crossing_count(), w.crossing_count());
        prop_assert_eq!(normalize_positive(&word), f.clone());
        prop_assert_eq!(gs_rewrite_to_fixpoint(&w, Strategy::Rightmost).form, f);
    }

    #[test]
    fn group_normal_form_round_trips(w in signed_words(6, 30)) {
        let f = normalize_group(&w).unwrap();
        prop_assert_eq!(normalize_group(&group_form_to_word(&f)).unwrap(), f.clone());
        prop_assert!(normalize_group(&w.concat(&w.formal_inverse()).unwrap()).unwrap().is_identity());
        prop_assert!(equal(&w, &group_form_to_word(&f)).unwrap());
        let json = format_normal_form(&f, FormStyle::Json);
        prop_assert_eq!(parse_normal_form_json(&json).unwrap(), f);
    }

    #[test]
    fn text_round_trips(w in signed_words(9, 20), (p, _, _) in perms(12)) {
        prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w);
        prop_assert_eq!(parse_permutation(&format_permutation(&p)).unwrap(), p.clone());
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
    }
}
