use cubicgap::certify::{gap_check, main_gap};
use cubicgap::families::*;
use cubicgap::graph::Girth;

#[test]
fn xn_structure_up_to_fifty() {
    for n in 2..=50 {
        let g = build_xn(n).unwrap();
        assert!(g.is_cubic() && g.is_connected());
        assert_eq!(g.n(), 6 * n);
        let shift: Vec<usize> = (0..6 * n).map(|v| (v + 6) % (6 * n)).collect();
        assert_eq!(g.relabel(&shift).unwrap(), g);
        assert_eq!(g.girth(), Girth::Finite(4));
        assert_eq!(classify(&g).unwrap(), Classification::Xn(n));
    }
}

#[test]
fn xn_closed_form_matches_direct_computation() {
    for n in 2..=XN_DIRECT_LIMIT {
        assert!(xn_charpoly_identity_check(n).unwrap(), "n = {n}");
    }
}

#[test]
fn xn_gaps_up_to_fifty() {
    for n in 2..=50 {
        let r = xn_gap_check(n).unwrap();
        assert!(r.ok, "{r:?}");
    }
    for n in 2..=8 {
        assert!(gap_check(&build_xn(n).unwrap(), &main_gap()).has_gap);
    }
}

#[test]
fn sporadic_spectra_expand_to_char_polys() {
    for s in Sporadic::ALL {
        let (g, rec) = sporadic(s).unwrap();
        assert_eq!(rec.vertex_count(), g.n());
        assert_eq!(classify(&g).unwrap(), Classification::Sporadic(s));
    }
}

#[test]
fn list_members_have_the_gap() {
    for s in Sporadic::ALL {
        assert!(gap_check(&s.graph(), &main_gap()).has_gap, "{s}");
    }
}
