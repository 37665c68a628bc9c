//! Turns a parsed presentation into a concrete group, when it falls into one
//! of the constructive fragments: cyclic, split metacyclic, metabelian with
//! abelian rank-2 base, or a class-<=3 free-nilpotent quotient. Anything else
//! is rejected with the reason; there is no general enumeration engine.

use crate::presentation::{Atom, Factor, PresentationAst, Word};
use free_nilpotent::{quotient_by_relators, FreeNilGroup, NilWord, PcpGroup};
use group_core::{Elt, FiniteGroup};
use std::sync::Arc;
use thiserror::Error;

pub const ORDER_CAP: u64 = 10_000;

#[derive(Debug, Error)]
pub enum RealizeError {
    #[error("not in supported fragment: {0}")]
    NotInFragment(String),
    #[error("order {0} exceeds the cap {ORDER_CAP}")]
    TooLarge(u128),
    #[error("inconsistent presentation: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Group(#[from] group_core::GroupError),
    #[error(transparent)]
    Nil(#[from] free_nilpotent::NilError),
}

pub enum Realized {
    Finite { group: FiniteGroup, route: String },
    Pcp { group: PcpGroup, route: String },
}

pub fn realize(ast: &PresentationAst) -> Result<Realized, RealizeError> {
    if let Some(c) = ast.class {
        return realize_nilpotent_quotient(ast, c);
    }
    match ast.generators.len() {
        1 => realize_cyclic(ast),
        2 => realize_metacyclic(ast),
        3 => realize_metabelian(ast),
        n => Err(RealizeError::NotInFragment(format!(
            "{n} generators without a class annotation"
        ))),
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn eval_nil(ctx: &FreeNilGroup, w: &Word) -> NilWord {
    let mut acc = ctx.identity();
    for f in w {
        let base = match &f.base {
            Atom::Gen(i) => ctx.generator(*i),
            Atom::Comm(l, r) => ctx.commutator(&eval_nil(ctx, l), &eval_nil(ctx, r)),
        };
        acc = ctx.mul(&acc, &ctx.pow(&base, f.exp));
    }
    acc
}

fn realize_nilpotent_quotient(ast: &PresentationAst, c: usize) -> Result<Realized, RealizeError> {
    if c > 3 {
        return Err(RealizeError::NotInFragment(format!(
            "class {c} quotients are unsupported (class <= 3)"
        )));
    }
    let ctx = Arc::new(FreeNilGroup::new(ast.generators.len(), c));
    let relators: Vec<NilWord> = ast.relators.iter().map(|w| eval_nil(&ctx, w)).collect();
    let group = quotient_by_relators(ctx, &relators).map_err(|e| match e {
        free_nilpotent::NilError::RelatorOutsideGamma2(_) => RealizeError::NotInFragment(
            "a relator lies outside the derived subgroup of the free group".into(),
        ),
        other => RealizeError::Nil(other),
    })?;
    let route = format!(
        "free class-{c} nilpotent quotient on {} generators, Hirsch length {}",
        ast.generators.len(),
        group.hirsch_length
    );
    Ok(Realized::Pcp { group, route })
}

/// A relator of the shape g^e (one factor, generator base).
fn as_power(w: &Word) -> Option<(usize, i64)> {
    match w.as_slice() {
        [Factor {
            base: Atom::Gen(g),
            exp,
        }] => Some((*g, *exp)),
        _ => None,
    }
}

fn eval_fin(g: &FiniteGroup, gens: &[Elt], w: &Word) -> Elt {
    let mut acc = g.identity();
    for f in w {
        let base = match &f.base {
            Atom::Gen(i) => gens[*i],
            Atom::Comm(l, r) => g.comm(eval_fin(g, gens, l), eval_fin(g, gens, r)),
        };
        acc = g.mul(acc, g.pow(base, f.exp));
    }
    acc
}

fn check_relators(
    g: &FiniteGroup,
    gens: &[Elt],
    ast: &PresentationAst,
) -> Result<(), RealizeError> {
    for (k, r) in ast.relators.iter().enumerate() {
        if eval_fin(g, gens, r) != g.identity() {
            return Err(RealizeError::Inconsistent(format!(
                "relator {} does not hold in the realized group",
                k + 1
            )));
        }
    }
    Ok(())
}

fn realize_cyclic(ast: &PresentationAst) -> Result<Realized, RealizeError> {
    if ast.relators.is_empty() {
        return Err(RealizeError::NotInFragment(
            "a free object request needs a class annotation".into(),
        ));
    }
    let mut order: u64 = 0;
    for r in &ast.relators {
        let Some((0, e)) = as_power(r) else {
            return Err(RealizeError::NotInFragment(
                "one-generator relators must be powers of the generator".into(),
            ));
        };
        order = gcd(order, e.unsigned_abs());
    }
    if order == 0 {
        return Err(RealizeError::NotInFragment(
            "relators impose no finite order".into(),
        ));
    }
    let group = group_core::build_cyclic(order)?;
    let gens = vec![if order > 1 { 1 } else { 0 }];
    check_relators(&group, &gens, ast)?;
    Ok(Realized::Finite {
        route: format!("cyclic of order {order}"),
        group,
    })
}

/// The commutator relator [x, t] * w or [x, t]^-1 * w, returning
/// (x, t, action word for x^t = x * v).
fn as_action(w: &Word) -> Option<(usize, usize, Word)> {
    let (first, rest) = w.split_first()?;
    let Atom::Comm(l, r) = &first.base else {
        return None;
    };
    let (&[Factor {
        base: Atom::Gen(x),
        exp: 1,
    }], &[Factor {
        base: Atom::Gen(t),
        exp: 1,
    }]) = (l.as_slice(), r.as_slice())
    else {
        return None;
    };
    // [x,t] w = 1 means x^t = x w^{-1}; [x,t]^{-1} w = 1 means x^t = x w.
    let v = match first.exp {
        1 => crate::presentation::invert_word(&rest.to_vec()),
        -1 => rest.to_vec(),
        _ => return None,
    };
    Some((x, t, v))
}

/// Abelian exponent vector of a word over the given generators; fails on
/// commutator atoms or other generators.
fn abelian_exponents(w: &Word, gens: &[usize]) -> Option<Vec<i64>> {
    let mut out = vec![0i64; gens.len()];
    for f in w {
        let Atom::Gen(g) = f.base else { return None };
        let k = gens.iter().position(|&x| x == g)?;
        out[k] += f.exp;
    }
    Some(out)
}

fn realize_metacyclic(ast: &PresentationAst) -> Result<Realized, RealizeError> {
    let mut powers: Vec<(usize, u64)> = Vec::new();
    let mut action = None;
    for r in &ast.relators {
        if let Some((g, e)) = as_power(r) {
            powers.push((g, e.unsigned_abs()));
        } else if let Some(a) = as_action(r) {
            if action.replace(a).is_some() {
                return Err(RealizeError::NotInFragment(
                    "more than one commutator relator".into(),
                ));
            }
        } else {
            return Err(RealizeError::NotInFragment(
                "a relator is neither a power nor an action commutator".into(),
            ));
        }
    }
    let Some((x, t, v)) = action else {
        return Err(RealizeError::NotInFragment(
            "no closure detected: a two-generator presentation needs a commutator relator".into(),
        ));
    };
    let exps = abelian_exponents(&v, &[x]).ok_or_else(|| {
        RealizeError::NotInFragment("the action word must be a power of the normal generator".into())
    })?;
    let t_order = powers
        .iter()
        .find(|&&(g, _)| g == t)
        .map(|&(_, e)| e)
        .filter(|&e| e > 0)
        .ok_or_else(|| RealizeError::NotInFragment("missing power relator for t".into()))?;
    let x_order = powers
        .iter()
        .find(|&&(g, _)| g == x)
        .map(|&(_, e)| e)
        .filter(|&e| e > 0)
        .ok_or_else(|| RealizeError::NotInFragment("missing power relator for a".into()))?;
    let order = t_order as u128 * x_order as u128;
    if order > ORDER_CAP as u128 {
        return Err(RealizeError::TooLarge(order));
    }
    // x^t = x^{1 + e}: the action multiplier mod the order of x.
    let act = (1 + exps[0]).rem_euclid(x_order as i64) as u64;
    if gcd(act, x_order) != 1 {
        return Err(RealizeError::Inconsistent(
            "the action is not an automorphism of the base".into(),
        ));
    }
    if pow_mod(act, t_order, x_order) != 1 % x_order {
        return Err(RealizeError::Inconsistent(format!(
            "the action has order not dividing {t_order}"
        )));
    }
    let group = build_split_metacyclic(t_order, x_order, act, &ast.generators[t], &ast.generators[x])?;
    let mut gens_map = vec![0 as Elt; 2];
    gens_map[t] = if t_order > 1 { x_order as Elt } else { 0 };
    gens_map[x] = if x_order > 1 { 1 } else { 0 };
    check_relators(&group, &gens_map, ast)?;
    Ok(Realized::Finite {
        route: format!(
            "split metacyclic C{t_order} acting on C{x_order} by multiplication by {act}"
        ),
        group,
    })
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn build_split_metacyclic(
    m: u64,
    n: u64,
    act: u64,
    t_name: &str,
    a_name: &str,
) -> Result<FiniteGroup, RealizeError> {
    let order = (m * n) as usize;
    let idx = |i: u64, j: u64| (i * n + j) as usize;
    let mut acts = Vec::with_capacity(m as usize);
    let mut cur = 1u64 % n;
    for _ in 0..m {
        acts.push(cur);
        cur = cur * act % n;
    }
    let mut rows = vec![vec![0 as Elt; order]; order];
    for i1 in 0..m {
        for j1 in 0..n {
            let r = idx(i1, j1);
            for i2 in 0..m {
                let ja = j1 * acts[i2 as usize] % n;
                for j2 in 0..n {
                    rows[r][idx(i2, j2)] = idx((i1 + i2) % m, (ja + j2) % n) as Elt;
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(order);
    for i in 0..m {
        for j in 0..n {
            let mut s = String::new();
            if i == 1 {
                s.push_str(t_name);
            } else if i > 1 {
                s.push_str(&format!("{t_name}^{i}"));
            }
            if j >= 1 {
                if !s.is_empty() {
                    s.push('*');
                }
                if j == 1 {
                    s.push_str(a_name);
                } else {
                    s.push_str(&format!("{a_name}^{j}"));
                }
            }
            if s.is_empty() {
                s.push('1');
            }
            labels.push(s);
        }
    }
    let mut gens = Vec::new();
    if m > 1 {
        gens.push(idx(1, 0) as Elt);
    }
    if n > 1 {
        gens.push(idx(0, 1) as Elt);
    }
    if gens.is_empty() {
        gens.push(0);
    }
    Ok(FiniteGroup::new(rows, labels, gens)?)
}

fn realize_metabelian(ast: &PresentationAst) -> Result<Realized, RealizeError> {
    let mut powers: Vec<(usize, u64)> = Vec::new();
    let mut actions: Vec<(usize, usize, Word)> = Vec::new();
    let mut base_comm: Option<(usize, usize)> = None;
    for r in &ast.relators {
        if let Some((g, e)) = as_power(r) {
            powers.push((g, e.unsigned_abs()));
        } else if let Some((x, t, v)) = as_action(r) {
            if v.is_empty() {
                // [x, t] alone: x and t commute.
                base_comm = Some((x, t));
            } else {
                actions.push((x, t, v));
            }
        } else {
            return Err(RealizeError::NotInFragment(
                "a relator is neither a power nor a commutator shape".into(),
            ));
        }
    }
    let Some((b1, b2)) = base_comm else {
        return Err(RealizeError::NotInFragment(
            "three-generator presentations need a commuting base pair [a,b]".into(),
        ));
    };
    if actions.len() != 2 {
        return Err(RealizeError::NotInFragment(format!(
            "expected action relators for both base generators, found {}",
            actions.len()
        )));
    }
    let t = actions[0].1;
    if actions[1].1 != t || t == b1 || t == b2 {
        return Err(RealizeError::NotInFragment(
            "the two action relators must conjugate by the same top generator".into(),
        ));
    }
    let base = [b1, b2];
    let order_of = |g: usize| {
        powers
            .iter()
            .find(|&&(h, _)| h == g)
            .map(|&(_, e)| e)
            .filter(|&e| e > 0)
            .ok_or_else(|| RealizeError::NotInFragment(format!("missing power relator for generator {g}")))
    };
    let m = order_of(t)?;
    let na = order_of(base[0])?;
    let nb = order_of(base[1])?;
    let order = m as u128 * na as u128 * nb as u128;
    if order > ORDER_CAP as u128 {
        return Err(RealizeError::TooLarge(order));
    }
    // phi: (j,k) -> action of t on a^j b^k, from x^t = x * v per base generator.
    let mut phi_rows = [[0i64; 2]; 2];
    for (x, _, v) in &actions {
        let row = base.iter().position(|g| g == x).ok_or_else(|| {
            RealizeError::NotInFragment("an action conjugates a non-base generator".into())
        })?;
        let exps = abelian_exponents(v, &base).ok_or_else(|| {
            RealizeError::NotInFragment("action words must stay in the abelian base".into())
        })?;
        phi_rows[row] = [exps[0] + i64::from(row == 0), exps[1] + i64::from(row == 1)];
    }
    let (na_i, nb_i) = (na as i64, nb as i64);
    let phi = |j: u64, k: u64| -> (u64, u64) {
        let j = j as i64;
        let k = k as i64;
        (
            (j * phi_rows[0][0] + k * phi_rows[1][0]).rem_euclid(na_i) as u64,
            (j * phi_rows[0][1] + k * phi_rows[1][1]).rem_euclid(nb_i) as u64,
        )
    };
    // phi must permute the base and have order dividing m.
    {
        let mut seen = vec![false; (na * nb) as usize];
        for j in 0..na {
            for k in 0..nb {
                let (j2, k2) = phi(j, k);
                let slot = (j2 * nb + k2) as usize;
                if std::mem::replace(&mut seen[slot], true) {
                    return Err(RealizeError::Inconsistent(
                        "the action does not permute the base".into(),
                    ));
                }
            }
        }
        for j in 0..na {
            for k in 0..nb {
                let (mut cj, mut ck) = (j, k);
                for _ in 0..m {
                    let next = phi(cj, ck);
                    cj = next.0;
                    ck = next.1;
                }
                if (cj, ck) != (j, k) {
                    return Err(RealizeError::Inconsistent(format!(
                        "the action order does not divide {m}"
                    )));
                }
            }
        }
    }
    let order = order as usize;
    let idx = |i: u64, j: u64, k: u64| (i * na * nb + j * nb + k) as usize;
    let mut rows = vec![vec![0 as Elt; order]; order];
    for i1 in 0..m {
        for j1 in 0..na {
            for k1 in 0..nb {
                let r = idx(i1, j1, k1);
                for i2 in 0..m {
                    let (mut ja, mut ka) = (j1, k1);
                    for _ in 0..i2 {
                        let next = phi(ja, ka);
                        ja = next.0;
                        ka = next.1;
                    }
                    for j2 in 0..na {
                        for k2 in 0..nb {
                            rows[r][idx(i2, j2, k2)] =
                                idx((i1 + i2) % m, (ja + j2) % na, (ka + k2) % nb) as Elt;
                        }
                    }
                }
            }
        }
    }
    let names = [
        ast.generators[t].clone(),
        ast.generators[base[0]].clone(),
        ast.generators[base[1]].clone(),
    ];
    let mut labels = Vec::with_capacity(order);
    for i in 0..m {
        for j in 0..na {
            for k in 0..nb {
                let mut s = String::new();
                for (name, e) in names.iter().zip([i, j, k]) {
                    if e == 0 {
                        continue;
                    }
                    if !s.is_empty() {
                        s.push('*');
                    }
                    if e == 1 {
                        s.push_str(name);
                    } else {
                        s.push_str(&format!("{name}^{e}"));
                    }
                }
                if s.is_empty() {
                    s.push('1');
                }
                labels.push(s);
            }
        }
    }
    let gens = vec![idx(1, 0, 0) as Elt, idx(0, 1, 0) as Elt, idx(0, 0, 1) as Elt];
    let group = FiniteGroup::new(rows, labels, gens)?;
    let mut gens_map = vec![0 as Elt; 3];
    gens_map[t] = idx(1, 0, 0) as Elt;
    gens_map[base[0]] = idx(0, 1, 0) as Elt;
    gens_map[base[1]] = idx(0, 0, 1) as Elt;
    check_relators(&group, &gens_map, ast)?;
    Ok(Realized::Finite {
        route: format!("metabelian C{m} acting on C{na} x C{nb}"),
        group,
    })
}
