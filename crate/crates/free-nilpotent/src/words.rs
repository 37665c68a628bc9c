//! Signed generator words and the commutator/inverse word constructors.

/// One signed letter: (generator index, exponent).
pub type LetterWord = Vec<(usize, i64)>;

pub fn inverse_word(w: &[(usize, i64)]) -> LetterWord {
    w.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

/// [a, b] = a^{-1} b^{-1} a b as a letter word.
pub fn commutator_word(a: &[(usize, i64)], b: &[(usize, i64)]) -> LetterWord {
    let mut out = inverse_word(a);
    out.extend(inverse_word(b));
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out
}

/// Left-normed [g_0, g_1, ..., g_k] over single generators.
pub fn left_normed_word(gens: &[usize]) -> LetterWord {
    let mut acc: LetterWord = vec![(gens[0], 1)];
    for &g in &gens[1..] {
        acc = commutator_word(&acc, &[(g, 1)]);
    }
    acc
}

pub fn power_word(w: &[(usize, i64)], e: i64) -> LetterWord {
    let mut out = LetterWord::new();
    if e >= 0 {
        for _ in 0..e {
            out.extend_from_slice(w);
        }
    } else {
        let iw = inverse_word(w);
        for _ in 0..(-e) {
            out.extend_from_slice(&iw);
        }
    }
    out
}
