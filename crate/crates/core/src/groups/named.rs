//! Constructors for the group mini-language.
//!
//! Accepted forms: `S<n>`, `A<n>`, `D<n>` (dihedral of order 2n), `Q8`,
//! `Z/n`, `Z/n^k`, `1`, `N:Q@action` and `perm:(1 2 3)(4 5),(1 2)`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{FiniteGroup, GroupMorphism};
use crate::error::{Error, Result};

/// Largest group a permutation-generator name may produce.
const PERMUTATION_LIMIT: usize = 5040;

type Perm = Vec<usize>;

/// `(a*b)(i) = a(b(i))`: apply `b` first.
fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&i| a[i]).collect()
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut i = p[start];
        while i != start {
            seen[i] = true;
            cycle.push(i + 1);
            i = p[i];
        }
        let body: Vec<String> = cycle.iter().map(usize::to_string).collect();
        out.push('(');
        out.push_str(&body.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// Group on a set of permutations closed under composition. Elements are
/// sorted lexicographically, so the identity is index 0.
fn from_permutations(mut perms: Vec<Perm>) -> FiniteGroup {
    perms.sort();
    let index: HashMap<&[usize], usize> =
        perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let n = perms.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &perms {
        for b in &perms {
            table.push(index[compose(a, b).as_slice()]);
        }
    }
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_flat_unchecked(n, table).with_names(names)
}

fn all_permutations(degree: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; degree], &mut out);
    out
}

fn is_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 0
}

pub fn symmetric_group(degree: usize) -> FiniteGroup {
    from_permutations(all_permutations(degree.max(1)))
}

fn alternating_group(degree: usize) -> FiniteGroup {
    from_permutations(all_permutations(degree.max(1)).into_iter().filter(|p| is_even(p)).collect())
}

/// Group generated by permutations given as 1-based cycle strings, e.g.
/// `["(1 2 3)(4 5)", "(1 2)"]`.
pub fn permutation_group(generators: &[&str]) -> Result<FiniteGroup> {
    let cycles: Vec<Vec<Vec<usize>>> = generators
        .iter()
        .map(|g| parse_cycles(g))
        .collect::<Result<_>>()?;
    let degree = cycles
        .iter()
        .flatten()
        .flatten()
        .copied()
        .max()
        .unwrap_or(1);
    let gens: Vec<Perm> = cycles
        .iter()
        .map(|cs| {
            let mut p: Perm = (0..degree).collect();
            // cycles compose right to left, like the product they denote
            for c in cs.iter().rev() {
                let mut q: Perm = (0..degree).collect();
                for (k, &x) in c.iter().enumerate() {
                    q[x - 1] = c[(k + 1) % c.len()] - 1;
                }
                p = compose(&q, &p);
            }
            p
        })
        .collect();
    let identity: Perm = (0..degree).collect();
    let mut seen: BTreeSet<Perm> = BTreeSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for s in &gens {
            let y = compose(&x, s);
            if seen.insert(y.clone()) {
                if seen.len() > PERMUTATION_LIMIT {
                    return Err(Error::CapExceeded { order: seen.len(), cap: PERMUTATION_LIMIT });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(from_permutations(seen.into_iter().collect()))
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let bad = || Error::UnknownName(format!("malformed permutation {s:?}"));
    let s = s.trim();
    let mut cycles = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(bad)?;
        let end = body.find(')').ok_or_else(bad)?;
        let points: Vec<usize> = body[..end]
            .split([' ', ','])
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if points.contains(&0) || points.iter().collect::<BTreeSet<_>>().len() != points.len() {
            return Err(bad());
        }
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = body[end + 1..].trim_start();
    }
    Ok(cycles)
}

fn cyclic_group(n: usize) -> FiniteGroup {
    let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
    FiniteGroup::from_flat_unchecked(n, table).with_names((0..n).map(|a| a.to_string()).collect())
}

/// `(Z/n)^k`, element index `Σ a_i n^i` (little-endian digits).
fn elementary_abelian(n: usize, k: u32) -> Result<FiniteGroup> {
    let order = n
        .checked_pow(k)
        .filter(|&o| o <= PERMUTATION_LIMIT)
        .ok_or(Error::CapExceeded { order: usize::MAX, cap: PERMUTATION_LIMIT })?;
    let digits = |mut x: usize| -> Vec<usize> {
        (0..k)
            .map(|_| {
                let d = x % n;
                x /= n;
                d
            })
            .collect()
    };
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let da = digits(a);
        for b in 0..order {
            let db = digits(b);
            let sum = da
                .iter()
                .zip(&db)
                .rev()
                .fold(0, |acc, (x, y)| acc * n + (x + y) % n);
            table.push(sum);
        }
    }
    let names = (0..order)
        .map(|a| {
            let d: Vec<String> = digits(a).iter().map(usize::to_string).collect();
            format!("({})", d.join(","))
        })
        .collect();
    Ok(FiniteGroup::from_flat_unchecked(order, table).with_names(names))
}

/// Dihedral group of order `2n`; index `b*n + a` stands for `r^a s^b`.
fn dihedral_group(n: usize) -> FiniteGroup {
    let order = 2 * n;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (b, a) = (x / n, x % n);
        for y in 0..order {
            let (d, c) = (y / n, y % n);
            let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
            table.push(((b + d) % 2) * n + rot);
        }
    }
    let names = (0..order)
        .map(|x| {
            let (b, a) = (x / n, x % n);
            let r = match a {
                0 => String::new(),
                1 => "r".into(),
                _ => format!("r^{a}"),
            };
            match (r.is_empty(), b) {
                (true, 0) => "1".into(),
                (true, _) => "s".into(),
                (false, 0) => r,
                (false, _) => format!("{r} s"),
            }
        })
        .collect();
    FiniteGroup::from_flat_unchecked(order, table).with_names(names)
}

/// Quaternion group; index `2u + s` is `(-1)^s · unit[u]` with units 1, i, j, k.
fn quaternion_group() -> FiniteGroup {
    // unit products: (sign flip, unit)
    const PROD: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut table = Vec::with_capacity(64);
    for x in 0..8 {
        for y in 0..8 {
            let (flip, u) = PROD[x / 2][y / 2];
            table.push(2 * u + (x % 2 + y % 2 + flip) % 2);
        }
    }
    let units = ["1", "i", "j", "k"];
    let names = (0..8)
        .map(|x| format!("{}{}", if x % 2 == 1 { "-" } else { "" }, units[x / 2]))
        .collect();
    FiniteGroup::from_flat_unchecked(8, table).with_names(names)
}

fn parse_number(s: &str, whole: &str) -> Result<usize> {
    s.trim()
        .parse::<usize>()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::UnknownName(whole.to_string()))
}

/// Parse a group name; see the module docs for the grammar.
pub fn named_group(name: &str) -> Result<FiniteGroup> {
    let s = name.trim();
    if let Some(gens) = s.strip_prefix("perm:") {
        let parts = split_generators(gens);
        let refs: Vec<&str> = parts.iter().map(String::as_str).collect();
        return permutation_group(&refs);
    }
    if let Some((left, action)) = s.split_once('@') {
        let (n, q) = left
            .split_once(':')
            .ok_or_else(|| Error::UnknownName(name.to_string()))?;
        return semidirect_from_spec(n, q, action.trim());
    }
    if let Some((n, q)) = s.split_once(':') {
        return semidirect_from_spec(n, q, "inv");
    }
    match s {
        "1" => return Ok(cyclic_group(1)),
        "Q8" => return Ok(quaternion_group()),
        _ => {}
    }
    if let Some(rest) = s.strip_prefix("Z/") {
        return match rest.split_once('^') {
            Some((n, k)) => {
                let n = parse_number(n, name)?;
                let k = parse_number(k, name)? as u32;
                elementary_abelian(n, k)
            }
            None => {
                let n = parse_number(rest, name)?;
                if n > PERMUTATION_LIMIT {
                    return Err(Error::CapExceeded { order: n, cap: PERMUTATION_LIMIT });
                }
                Ok(cyclic_group(n))
            }
        };
    }
    let (head, tail) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
    match head {
        "S" | "A" => {
            let n = parse_number(tail, name)?;
            if n > 7 {
                return Err(Error::CapExceeded { order: usize::MAX, cap: PERMUTATION_LIMIT });
            }
            Ok(if head == "S" { symmetric_group(n) } else { alternating_group(n) })
        }
        "D" => {
            let n = parse_number(tail, name)?;
            if 2 * n > PERMUTATION_LIMIT {
                return Err(Error::CapExceeded { order: 2 * n, cap: PERMUTATION_LIMIT });
            }
            Ok(dihedral_group(n))
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// Split `"(1 2 3)(4 5),(1 2)"` at commas outside parentheses.
fn split_generators(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    parts.push(cur);
    parts.into_iter().filter(|p| !p.trim().is_empty()).collect()
}

fn semidirect_from_spec(n_spec: &str, q_spec: &str, action: &str) -> Result<FiniteGroup> {
    let n = named_group(n_spec)?;
    let q = named_group(q_spec)?;
    let gens = q.small_generating_set();
    if gens.len() > 1 {
        return Err(Error::BadSemidirectAction(format!("{q_spec} is not cyclic")));
    }
    let phi: Vec<usize> = match action {
        "inv" => n.elements().map(|x| n.inv(x)).collect(),
        "id" | "trivial" => n.elements().collect(),
        _ if action.starts_with("mul:") => {
            let k: usize = action[4..]
                .trim()
                .parse()
                .map_err(|_| Error::BadSemidirectAction(format!("bad exponent in {action:?}")))?;
            n.elements().map(|x| n.pow(x, k)).collect()
        }
        _ if action.starts_with('[') && action.ends_with(']') => action[1..action.len() - 1]
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&i| i < n.order())
                    .ok_or_else(|| Error::BadSemidirectAction(format!("bad image {t:?}")))
            })
            .collect::<Result<_>>()?,
        _ => return Err(Error::BadSemidirectAction(format!("unknown action {action:?}"))),
    };
    if phi.len() != n.order() {
        return Err(Error::BadSemidirectAction(format!(
            "image list has {} entries, expected {}",
            phi.len(),
            n.order()
        )));
    }
    let phi = GroupMorphism::new(n.order(), n.order(), phi);
    if !phi.is_automorphism_of(&n) {
        return Err(Error::BadSemidirectAction(format!("{action:?} is not an automorphism of {n_spec}")));
    }
    let mut actions = vec![GroupMorphism::identity(n.order()); q.order()];
    if let Some(&g) = gens.first() {
        let mut x = g;
        let mut power = phi.clone();
        while x != q.identity() {
            actions[x] = power.clone();
            x = q.mul(x, g);
            power = phi.compose_after(&power);
        }
        if !power.is_identity() {
            return Err(Error::BadSemidirectAction(format!(
                "action order does not divide |{q_spec}| = {}",
                q.order()
            )));
        }
    }
    super::semidirect_product(&n, &q, &actions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{conjugacy_classes, find_isomorphism, group_from_table};

    fn revalidate(g: &FiniteGroup) -> FiniteGroup {
        group_from_table(&g.rows()).expect("constructed tables are groups")
    }

    #[test]
    fn orders_of_named_groups() {
        for (name, order) in [
            ("1", 1),
            ("Z/1", 1),
            ("S3", 6),
            ("S4", 24),
            ("S5", 120),
            ("A4", 12),
            ("A5", 60),
            ("D4", 8),
            ("D5", 10),
            ("Q8", 8),
            ("Z/7", 7),
            ("Z/2^3", 8),
            ("Z/3^2", 9),
        ] {
            let g = named_group(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
            revalidate(&g);
        }
    }

    #[test]
    fn permutation_elements_are_lexicographic() {
        let g = named_group("S3").unwrap();
        assert_eq!(g.identity(), 0);
        assert_eq!(g.name(0), "()");
        assert_eq!(g.name(1), "(2 3)");
        assert_eq!(g.name(5), "(1 3)");
    }

    #[test]
    fn permutation_generators() {
        let g = named_group("perm:(1 2 3 4),(1 2)").unwrap();
        assert!(find_isomorphism(&g, &named_group("S4").unwrap()).is_some());
        let v4 = named_group("perm:(1 2)(3 4),(1 3)(2 4)").unwrap();
        assert!(find_isomorphism(&v4, &named_group("Z/2^2").unwrap()).is_some());
        assert!(named_group("perm:(1 2").is_err());
        assert!(named_group("perm:(1 1)").is_err());
    }

    #[test]
    fn dihedral_and_quaternion_structure() {
        let d4 = named_group("D4").unwrap();
        let q8 = named_group("Q8").unwrap();
        assert_eq!(conjugacy_classes(&d4).len(), 5);
        assert_eq!(conjugacy_classes(&q8).len(), 5);
        let inv_count = |g: &FiniteGroup| g.elements().filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(inv_count(&d4), 5);
        assert_eq!(inv_count(&q8), 1);
        let d3 = named_group("D3").unwrap();
        assert!(find_isomorphism(&d3, &named_group("S3").unwrap()).is_some());
    }

    #[test]
    fn semidirect_specs() {
        let g = named_group("Z/3:Z/2@inv").unwrap();
        assert!(find_isomorphism(&revalidate(&g), &named_group("S3").unwrap()).is_some());
        let g = named_group("Z/3:Z/2").unwrap();
        assert!(!g.is_abelian());
        let g = named_group("Z/3:Z/2@id").unwrap();
        assert!(find_isomorphism(&g, &named_group("Z/6").unwrap()).is_some());
        let g = named_group("Z/7:Z/3@mul:2").unwrap();
        assert_eq!(g.order(), 21);
        assert!(!g.is_abelian());
        let g = named_group("Z/4:Z/2@[0,3,2,1]").unwrap();
        assert!(find_isomorphism(&g, &named_group("D4").unwrap()).is_some());
    }

    #[test]
    fn bad_specs() {
        assert!(matches!(named_group("X9"), Err(Error::UnknownName(_))));
        assert!(matches!(named_group("Z/0"), Err(Error::UnknownName(_))));
        // x -> 2x has order 2 on Z/3 but Z/3 acting needs order dividing 3
        assert!(matches!(named_group("Z/3:Z/3@mul:2"), Err(Error::BadSemidirectAction(_))));
        assert!(matches!(named_group("Z/4:Z/2@[0,2,1,3]"), Err(Error::BadSemidirectAction(_))));
        assert!(matches!(named_group("Z/3:Z/2^2@inv"), Err(Error::BadSemidirectAction(_))));
    }
}
