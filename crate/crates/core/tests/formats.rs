use perfmax::format::{emit_digraph6, emit_graph6, parse_digraph6, parse_graph6};
use perfmax::{Digraph, Graph};
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = Graph> {
    (0usize..=70)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2),
            )
        })
        .prop_map(|(n, bits)| {
            let mut g = Graph::new(n.min(64)).unwrap();
            let n = g.num_vertices();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
}

fn digraph() -> impl Strategy<Value = Digraph> {
    (0usize..=10)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * n)))
        .prop_map(|(n, bits)| {
            let mut d = Digraph::new(n).unwrap();
            for (i, b) in bits.into_iter().enumerate() {
                if b {
                    d.add_arc(i / n, i % n);
                }
            }
            d
        })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph()) {
        let code = emit_graph6(&g);
        prop_assert_eq!(&parse_graph6(&code).unwrap(), &g);
        prop_assert_eq!(emit_graph6(&parse_graph6(&code).unwrap()), code);
    }

    #[test]
    fn digraph6_round_trip(d in digraph()) {
        let code = emit_digraph6(&d);
        prop_assert_eq!(code[0], b'&');
        prop_assert_eq!(parse_digraph6(&code).unwrap(), d);
    }

    #[test]
    fn garbage_never_panics(bytes in proptest::collection::vec(any::<u8>(), 0..40)) {
        let _ = parse_graph6(&bytes);
        let _ = parse_digraph6(&bytes);
    }
}

#[test]
fn known_encodings() {
    assert_eq!(emit_graph6(&Graph::complete(4).unwrap()), b"C~");
    assert_eq!(emit_graph6(&Graph::cycle(5).unwrap()), b"Dhc");
    let loops = Digraph::from_arcs(2, &[(0, 0), (1, 0)]).unwrap();
    assert_eq!(
        parse_digraph6(&emit_digraph6(&loops)).unwrap().num_loops(),
        1
    );
}
