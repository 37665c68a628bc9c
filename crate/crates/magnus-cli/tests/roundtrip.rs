//! Parse-print roundtrips over the builtin corpus and fuzz-generated
//! presentations.

use magnus_cli::presentation::{Atom, Factor, PresentationAst, Word};
use magnus_cli::{parse_presentation, realize, Realized};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_word(rng: &mut ChaCha8Rng, gens: usize, depth: usize) -> Word {
    let len = rng.random_range(1..=3);
    (0..len)
        .map(|_| {
            let base = if depth > 0 && rng.random_bool(0.3) {
                Atom::Comm(
                    random_word(rng, gens, depth - 1),
                    random_word(rng, gens, depth - 1),
                )
            } else {
                Atom::Gen(rng.random_range(0..gens))
            };
            let mut exp = rng.random_range(-4i64..=4);
            if exp == 0 {
                exp = 1;
            }
            Factor { base, exp }
        })
        .collect()
}

fn random_ast(rng: &mut ChaCha8Rng) -> PresentationAst {
    let gens = rng.random_range(1..=4);
    let names = ["a", "b", "c", "d"][..gens]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let relators = (0..rng.random_range(0..5))
        .map(|_| random_word(rng, gens, 2))
        .collect();
    PresentationAst {
        name: "Fuzz".into(),
        generators: names,
        relators,
        class: if rng.random_bool(0.5) {
            Some(rng.random_range(1..=4))
        } else {
            None
        },
    }
}

#[test]
fn print_parse_roundtrip_100_fuzzed() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xF022);
    for i in 0..100 {
        let ast = random_ast(&mut rng);
        let printed = ast.to_string();
        let reparsed = parse_presentation(&printed)
            .unwrap_or_else(|e| panic!("fuzz {i}: {printed}\n{e}"));
        assert_eq!(ast, reparsed, "fuzz {i}: {printed}");
    }
}

#[test]
fn builtin_texts_realize_and_roundtrip() {
    let texts = [
        "group T { gens: t a b; rels: t^3, a^9, b^9, [a,b], [a,t]*b^3, [b,t]*a^3; }",
        "group Gp32 { gens: t a; rels: [a,t] = a^3, t^3, a^9; }",
        "group Gp52 { gens: t a; rels: [a,t] = a^5, t^5, a^25; }",
        "group C12 { gens: g; rels: g^12; }",
        "group F23 { gens: x y; rels: ; class: 3; }",
    ];
    for text in texts {
        let ast = parse_presentation(text).unwrap();
        let reparsed = parse_presentation(&ast.to_string()).unwrap();
        assert_eq!(ast, reparsed);
        realize(&ast).unwrap();
    }
}

#[test]
fn realized_orders_match_references() {
    let ast = parse_presentation(
        "group Gp52 { gens: t a; rels: [a,t] = a^5, t^5, a^25; }",
    )
    .unwrap();
    let Realized::Finite { group, .. } = realize(&ast).unwrap() else {
        panic!()
    };
    assert_eq!(group.order(), 125);
}
