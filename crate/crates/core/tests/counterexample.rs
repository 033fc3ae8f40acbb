use std::time::Instant;

use weakstar_core::colouring::is_list_colouring;
use weakstar_core::counterexamples::{
    build_gadget_h, build_glued_g, extend_pair, glue, terminal_pairs, verify_not_7_truncated_choosable, COPIES, X, Y,
};

#[test]
fn glued_graph_refutes_every_terminal_pair() {
    let h = build_gadget_h().unwrap();
    let start = Instant::now();
    let g = build_glued_g(&h).unwrap();
    assert_eq!(g.graph.n(), 42 * 26 + 2);
    assert!(g.graph.degree(X) >= 7 && g.graph.degree(Y) >= 7);
    assert_eq!(g.lists.list(X).len(), 7);
    let report = verify_not_7_truncated_choosable(&g);
    assert!(report.all_refuted());
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn dropping_a_copy_lets_its_pair_through() {
    let h = build_gadget_h().unwrap();
    for dropped in [0, 17, COPIES - 1] {
        let keep: Vec<usize> = (0..COPIES).filter(|&i| i != dropped).collect();
        let g = glue(&h, &keep).unwrap();
        let phi = extend_pair(&g, terminal_pairs()[dropped]).expect("missing pair extends");
        assert!(is_list_colouring(&g.graph, &g.lists, &phi));
        // a pair that still has its copy is blocked
        assert!(extend_pair(&g, terminal_pairs()[(dropped + 1) % COPIES]).is_none());
    }
}
