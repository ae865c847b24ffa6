//! Symbolic coefficient tables of split forms and consistent chains of α/β tokens.
//!
//! Expanding (α_n + β_nγ_n)⋯(α_1 + β_1γ_1) with alternating γ_i ∈ {x, y} gives, for each
//! transversal word, a sum of monomials with one conjugated α_i or β_i per index. Since H
//! acts trivially on KN, conjugating words only matter through their image in Γ/H, so a
//! token carries a Klein-four label instead of a word.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::coeff_ring::Klein;
use crate::dihedral::{DihedralWord, Letter};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TokenKind {
    Alpha,
    Beta,
}

impl TokenKind {
    pub fn other(self) -> TokenKind {
        match self {
            TokenKind::Alpha => TokenKind::Beta,
            TokenKind::Beta => TokenKind::Alpha,
        }
    }
}

/// α_i^g or β_i^g.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Token {
    pub kind: TokenKind,
    pub index: usize,
    pub conj: Klein,
}

impl Token {
    pub fn alpha(index: usize, conj: Klein) -> Self {
        Token {
            kind: TokenKind::Alpha,
            index,
            conj,
        }
    }

    pub fn beta(index: usize, conj: Klein) -> Self {
        Token {
            kind: TokenKind::Beta,
            index,
            conj,
        }
    }

    /// The token with the same index and label and the other kind.
    pub fn partner(&self) -> Token {
        Token {
            kind: self.kind.other(),
            ..*self
        }
    }

    pub fn conjugate(&self, g: Klein) -> Token {
        Token {
            conj: self.conj * g,
            ..*self
        }
    }

    fn sort_key(&self) -> (Reverse<usize>, TokenKind, Klein) {
        (Reverse(self.index), self.kind, self.conj)
    }
}

/// Highest index first, then α before β.
impl Ord for Token {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Token {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            TokenKind::Alpha => 'a',
            TokenKind::Beta => 'b',
        };
        write!(f, "{k}{}", self.index)?;
        if self.conj != Klein::E {
            write!(f, "^{}", self.conj)?;
        }
        Ok(())
    }
}

impl FromStr for Token {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("{msg} in token {s:?}"),
        };
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('a') => TokenKind::Alpha,
            Some('b') => TokenKind::Beta,
            _ => return Err(bad("expected a or b")),
        };
        let rest = chars.as_str();
        let (num, conj) = match rest.split_once('^') {
            Some((num, "x")) => (num, Klein::X),
            Some((num, "y")) => (num, Klein::Y),
            Some((num, "z")) => (num, Klein::Z),
            Some(_) => return Err(bad("label must be x, y or z")),
            None => (rest, Klein::E),
        };
        let index: usize = num.parse().map_err(|_| bad("bad index"))?;
        if index == 0 {
            return Err(bad("indices start at 1"));
        }
        Ok(Token { kind, index, conj })
    }
}

/// A product of one token per index, highest index first.
pub type Monomial = Vec<Token>;

/// The letters γ_n, …, γ_1 of a table with γ_n = start; entry `i - 1` holds γ_i.
pub fn gammas(n: usize, start: Letter) -> Vec<Letter> {
    (1..=n)
        .map(|i| if (n - i).is_multiple_of(2) { start } else { start.other() })
        .collect()
}

/// The table V_{n,start}: transversal word ↦ monomials of its coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VTable {
    n: usize,
    start: Letter,
    entries: BTreeMap<DihedralWord, Vec<Monomial>>,
}

impl VTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn start(&self) -> Letter {
        self.start
    }

    pub fn entries(&self) -> &BTreeMap<DihedralWord, Vec<Monomial>> {
        &self.entries
    }

    pub fn coefficient(&self, w: &DihedralWord) -> Option<&[Monomial]> {
        self.entries.get(w).map(Vec::as_slice)
    }

    /// All tokens occurring in the table, in canonical order.
    pub fn tokens(&self) -> BTreeSet<Token> {
        self.entries.values().flatten().flatten().copied().collect()
    }
}

impl fmt::Display for VTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut words: Vec<_> = self.entries.iter().collect();
        words.sort_by(|(a, _), (b, _)| b.cmp(a));
        for (w, monos) in words {
            let terms: Vec<String> = monos
                .iter()
                .map(|m| m.iter().map(Token::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            writeln!(f, "{w}: {}", terms.join(" + "))?;
        }
        Ok(())
    }
}

pub fn build_vtable(n: usize, start: Letter) -> Result<VTable> {
    if n == 0 || n > 24 {
        return Err(Error::Usage(format!("table size n must be in 1..=24, got {n}")));
    }
    let gam = gammas(n, start);
    let mut entries: BTreeMap<DihedralWord, Vec<Monomial>> = BTreeMap::new();
    for choice in 0u32..(1 << n) {
        let mut mono = Vec::with_capacity(n);
        let mut label = Klein::E;
        let mut letters = Vec::new();
        for i in (1..=n).rev() {
            let beta = choice >> (i - 1) & 1 == 1;
            if beta {
                mono.push(Token::beta(i, label));
                letters.push(gam[i - 1]);
                label = label * gam[i - 1].klein();
            } else {
                mono.push(Token::alpha(i, label));
            }
        }
        entries
            .entry(DihedralWord::reduce(letters))
            .or_default()
            .push(mono);
    }
    for monos in entries.values_mut() {
        monos.sort();
    }
    Ok(VTable { n, start, entries })
}

/// A set of tokens never containing both α_i^g and β_i^g.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Chain(BTreeSet<Token>);

impl Chain {
    pub fn new(tokens: impl IntoIterator<Item = Token>) -> Result<Self> {
        let set: BTreeSet<Token> = tokens.into_iter().collect();
        if let Some(t) = set.iter().find(|t| set.contains(&t.partner())) {
            return Err(Error::InvalidChain(format!("contains both {t} and {}", t.partner())));
        }
        Ok(Chain(set))
    }

    pub fn tokens(&self) -> &BTreeSet<Token> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, t: &Token) -> bool {
        self.0.contains(t)
    }

    pub fn is_subset(&self, other: &Chain) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Every label multiplied by `g`.
    pub fn conjugate(&self, g: Klein) -> Chain {
        Chain(self.0.iter().map(|t| t.conjugate(g)).collect())
    }

    pub fn with(&self, t: Token) -> Result<Chain> {
        Chain::new(self.0.iter().copied().chain([t]))
    }

    /// Tokens of index below `n`.
    pub fn core(&self, n: usize) -> Chain {
        Chain(self.0.iter().filter(|t| t.index < n).copied().collect())
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Token::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl FromStr for Chain {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let tokens = inner
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Token>>>()?;
        Chain::new(tokens)
    }
}

/// Condition (1): for a coefficient with m terms, if at least m − 1 terms contain a
/// token of the chain, all m must.
pub fn is_consistent(c: &Chain, v: &VTable) -> bool {
    v.entries.values().all(|monos| {
        let m = monos.len();
        let hit = monos
            .iter()
            .filter(|mono| mono.iter().any(|t| c.contains(t)))
            .count();
        hit + 1 < m || hit == m
    })
}

/// The table with tokens replaced by bit positions.
struct Compiled {
    tokens: Vec<Token>,
    coeffs: Vec<Vec<u128>>,
    conflicts: Vec<u128>,
}

impl Compiled {
    fn new(v: &VTable) -> Result<Self> {
        let tokens: Vec<Token> = v.tokens().into_iter().collect();
        if tokens.len() > 128 {
            return Err(Error::Usage(format!("{} tokens exceed the 128-bit search", tokens.len())));
        }
        let pos: HashMap<Token, usize> = tokens.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let coeffs = v
            .entries
            .values()
            .map(|monos| {
                monos
                    .iter()
                    .map(|m| m.iter().fold(0u128, |acc, t| acc | 1 << pos[t]))
                    .collect()
            })
            .collect();
        let conflicts = tokens
            .iter()
            .map(|t| pos.get(&t.partner()).map_or(0, |&j| 1u128 << j))
            .collect();
        Ok(Compiled {
            tokens,
            coeffs,
            conflicts,
        })
    }

    fn consistent(&self, mask: u128) -> bool {
        self.coeffs.iter().all(|monos| {
            let hit = monos.iter().filter(|m| *m & mask != 0).count();
            hit + 1 < monos.len() || hit == monos.len()
        })
    }

    fn chain(&self, mask: u128) -> Chain {
        Chain(
            (0..self.tokens.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| self.tokens[i])
                .collect(),
        )
    }

    /// Consistent sets of exactly `left` more tokens drawn from positions ≥ `from`,
    /// skipping supersets of `found`.
    fn extend(&self, mask: u128, from: usize, left: usize, found: &[u128], out: &mut Vec<u128>) {
        if found.iter().any(|f| f & mask == *f) {
            return;
        }
        if left == 0 {
            if self.consistent(mask) {
                out.push(mask);
            }
            return;
        }
        for i in from..self.tokens.len() {
            if self.tokens.len() - i < left {
                break;
            }
            if self.conflicts[i] & mask != 0 {
                continue;
            }
            self.extend(mask | 1 << i, i + 1, left - 1, found, out);
        }
    }
}

/// All inclusion-minimal consistent chains with at most `bound` tokens, by iterative
/// deepening on the size.
pub fn minimal_chains(v: &VTable, bound: usize) -> Result<BTreeSet<Chain>> {
    let comp = Compiled::new(v)?;
    let mut found: Vec<u128> = Vec::new();
    for size in 1..=bound.min(comp.tokens.len()) {
        let level: Vec<u128> = (0..comp.tokens.len())
            .into_par_iter()
            .flat_map_iter(|first| {
                let mut out = Vec::new();
                comp.extend(1 << first, first + 1, size - 1, &found, &mut out);
                out
            })
            .collect();
        found.extend(level);
    }
    Ok(found.into_iter().map(|m| comp.chain(m)).collect())
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::Usage(format!("n must be at least 3, got {n}")));
    }
    Ok(())
}

/// U_{n,start}: β_{n−1}, β_{n−2}^y, β_{n−3}^z, β_{n−4}^x, … down to β_2 (x and y swapped
/// when start = y).
pub fn u_sequence(n: usize, start: Letter) -> Result<Vec<Token>> {
    check_n(n)?;
    let other = start.other().klein();
    let cycle = [Klein::E, other, Klein::Z, start.klein()];
    Ok((0..n - 2).map(|j| Token::beta(n - 1 - j, cycle[j % 4])).collect())
}

fn pairs_and_extensions(n: usize, start: Letter, previous: &BTreeSet<Chain>) -> Result<BTreeSet<Chain>> {
    let u = u_sequence(n, start)?;
    let mut out = BTreeSet::new();
    for lam in &u {
        for mu0 in &u {
            out.insert(Chain::new([*lam, mu0.conjugate(start.klein())])?);
        }
    }
    for r in previous {
        out.insert(r.with(Token::beta(n, Klein::E))?);
        out.insert(r.conjugate(start.klein()).with(Token::alpha(n, Klein::E))?);
    }
    Ok(out)
}

fn base_case(start: Letter) -> BTreeSet<Chain> {
    let c = Chain::new([Token::beta(2, Klein::E), Token::beta(2, start.klein())]).expect("valid chain");
    BTreeSet::from([c])
}

/// The recursive rule applied literally: U-pairs, R ∪ {β_n} and R^start ∪ {α_n} for R
/// produced by the rule at n − 1 with the other start letter.
pub fn recursive_candidates(n: usize, start: Letter) -> Result<BTreeSet<Chain>> {
    check_n(n)?;
    if n == 3 {
        return Ok(base_case(start));
    }
    let prev = recursive_candidates(n - 1, start.other())?;
    pairs_and_extensions(n, start, &prev)
}

/// The recursive rule with non-minimal candidates discarded at every level.
pub fn recursive_minimal_chains(n: usize, start: Letter) -> Result<BTreeSet<Chain>> {
    check_n(n)?;
    if n == 3 {
        return Ok(base_case(start));
    }
    let prev = recursive_minimal_chains(n - 1, start.other())?;
    Ok(inclusion_minimal(pairs_and_extensions(n, start, &prev)?))
}

pub fn inclusion_minimal(chains: BTreeSet<Chain>) -> BTreeSet<Chain> {
    chains
        .iter()
        .filter(|c| !chains.iter().any(|d| d != *c && d.is_subset(c)))
        .cloned()
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ChainOp {
    /// Conjugation by x.
    Cx,
    /// Conjugation by y.
    Cy,
    /// The automorphism interchanging x and y.
    SwapXy,
    /// The anti-automorphism g ↦ g⁻¹.
    Star,
}

impl ChainOp {
    pub const ALL: [ChainOp; 4] = [ChainOp::Cx, ChainOp::Cy, ChainOp::SwapXy, ChainOp::Star];
}

/// Image of a chain for V_{n,start}; returns the chain and the start letter of the
/// table it belongs to.
pub fn chain_action(c: &Chain, n: usize, start: Letter, op: ChainOp) -> (Chain, Letter) {
    match op {
        ChainOp::Cx => (c.conjugate(Klein::X), start),
        ChainOp::Cy => (c.conjugate(Klein::Y), start),
        ChainOp::SwapXy => (
            Chain(
                c.0.iter()
                    .map(|t| Token {
                        conj: t.conj.swap_xy(),
                        ..*t
                    })
                    .collect(),
            ),
            start.other(),
        ),
        ChainOp::Star => {
            let gam = gammas(n, start);
            let image = c
                .0
                .iter()
                .map(|t| {
                    let conj = match t.kind {
                        TokenKind::Alpha => t.conj * Klein::Z,
                        TokenKind::Beta => t.conj * Klein::Z * gam[t.index - 1].klein(),
                    };
                    Token {
                        kind: t.kind,
                        index: n + 1 - t.index,
                        conj,
                    }
                })
                .collect();
            (Chain(image), gam[0])
        }
    }
}

/// Groups chains of V_{n,x} and V_{n,y} by the orbits of their cores (the tokens of
/// index below n) under c_x, c_y, the x/y swap and ∗, with ∗ applied from either table.
pub fn chain_orbits(chains: &BTreeSet<Chain>, n: usize) -> Vec<BTreeSet<Chain>> {
    let cores: Vec<Chain> = chains
        .iter()
        .map(|c| c.core(n))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let pos: HashMap<&Chain, usize> = cores.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut parent: Vec<usize> = (0..cores.len()).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for (i, c) in cores.iter().enumerate() {
        for side in [Letter::X, Letter::Y] {
            for op in ChainOp::ALL {
                let (img, _) = chain_action(c, n, side, op);
                if let Some(&j) = pos.get(&img) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, BTreeSet<Chain>> = BTreeMap::new();
    for c in chains {
        let root = find(&mut parent, pos[&c.core(n)]);
        groups.entry(root).or_default().insert(c.clone());
    }
    let mut out: Vec<BTreeSet<Chain>> = groups.into_values().collect();
    out.sort();
    out
}
