//! Letters, words and multi-letter words over a finite alphabet.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{gauss, parse_gauss, render_gauss, GaussRational};

/// An element of the alphabet D, stored exactly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Label(GaussRational);

impl Label {
    pub fn new(z: GaussRational) -> Self {
        Label(z)
    }

    pub fn int(n: i64) -> Self {
        Label(gauss(BigRational::from_integer(n.into()), BigRational::zero()))
    }

    pub fn real(q: BigRational) -> Self {
        Label(gauss(q, BigRational::zero()))
    }

    pub fn value(&self) -> &GaussRational {
        &self.0
    }

    /// The real value if the label lies on the real axis.
    pub fn as_real(&self) -> Option<&BigRational> {
        self.0.im.is_zero().then_some(&self.0.re)
    }

    pub fn is_zero(&self) -> bool {
        self.0.re.is_zero() && self.0.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.re.is_one() && self.0.im.is_zero()
    }

    /// `self / other`; `None` when `other` is zero.
    pub fn div(&self, other: &Label) -> Option<Label> {
        if other.is_zero() {
            return None;
        }
        Some(Label(self.0.clone() / other.0.clone()))
    }

    pub fn mul(&self, other: &Label) -> Label {
        Label(self.0.clone() * other.0.clone())
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.re.cmp(&other.0.re).then_with(|| self.0.im.cmp(&other.0.im))
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_gauss(&self.0))
    }
}

impl FromStr for Label {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_gauss(s).map(Label)
    }
}

/// The finite alphabet D, sorted and without repetitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    labels: Vec<Label>,
}

impl Alphabet {
    pub fn new(labels: impl IntoIterator<Item = Label>) -> Self {
        let mut labels: Vec<Label> = labels.into_iter().collect();
        labels.sort();
        labels.dedup();
        Alphabet { labels }
    }

    pub fn ints(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| Label::int(v)))
    }

    /// `"0,1,-1"`, `"0, 1, i"`
    pub fn parse(src: &str) -> Result<Self> {
        let mut labels = Vec::new();
        let mut offset = 0;
        for part in src.split(',') {
            let label = part.trim().parse::<Label>().map_err(|e| shift(e, offset))?;
            labels.push(label);
            offset += part.len() + 1;
        }
        Ok(Self::new(labels))
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn contains(&self, a: &Label) -> bool {
        self.labels.binary_search(a).is_ok()
    }

    pub fn check(&self, a: &Label) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::LabelNotInAlphabet(a.to_string()))
        }
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        w.letters().iter().try_for_each(|a| self.check(a))
    }

    pub fn check_multi(&self, w: &MultiWord) -> Result<()> {
        w.letters().iter().flat_map(|m| m.labels()).try_for_each(|a| self.check(a))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A monomial `e_{a1} ⋯ e_{ak}`; the empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Label>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Label>) -> Self {
        Word(letters)
    }

    pub fn ints(values: &[i64]) -> Self {
        Word(values.iter().map(|&v| Label::int(v)).collect())
    }

    pub fn letter(a: Label) -> Self {
        Word(vec![a])
    }

    pub fn letters(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<&Label> {
        self.0.first()
    }

    pub fn last(&self) -> Option<&Label> {
        self.0.last()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn prepend(&self, a: &Label) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(a.clone());
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn append(&self, a: &Label) -> Word {
        let mut v = self.0.clone();
        v.push(a.clone());
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().cloned().collect())
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    pub fn parse(src: &str) -> Result<Word> {
        let letters = parse_letters(src)?;
        letters
            .into_iter()
            .map(|(pos, mut labels)| {
                if labels.len() == 1 {
                    Ok(labels.pop().unwrap())
                } else {
                    Err(Error::parse(pos, "multi-letter in a plain word"))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl From<Vec<Label>> for Word {
    fn from(v: Vec<Label>) -> Self {
        Word(v)
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i + 1;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            write!(f, "e[{}]", self.0[i])?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// A generator `e_{a1,…,am}` of the auxiliary algebra: m forms on one index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiLetter(Vec<Label>);

impl MultiLetter {
    pub fn new(labels: Vec<Label>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Precondition("multi-letter needs at least one label".into()));
        }
        Ok(MultiLetter(labels))
    }

    pub fn single(a: Label) -> Self {
        MultiLetter(vec![a])
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }
}

impl fmt::Display for MultiLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "e[{}]", parts.join(","))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiWord(Vec<MultiLetter>);

impl MultiWord {
    pub fn new(letters: Vec<MultiLetter>) -> Self {
        MultiWord(letters)
    }

    /// One multi-letter carrying every label.
    pub fn diagonal(labels: Vec<Label>) -> Result<Self> {
        Ok(MultiWord(vec![MultiLetter::new(labels)?]))
    }

    pub fn letters(&self) -> &[MultiLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parse(src: &str) -> Result<MultiWord> {
        parse_letters(src).map(|ls| MultiWord(ls.into_iter().map(|(_, l)| MultiLetter(l)).collect()))
    }
}

impl From<&Word> for MultiWord {
    fn from(w: &Word) -> Self {
        MultiWord(w.letters().iter().cloned().map(MultiLetter::single).collect())
    }
}

impl FromStr for MultiWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MultiWord::parse(s)
    }
}

impl fmt::Display for MultiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        self.0.iter().try_for_each(|m| write!(f, "{m}"))
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}

/// Grammar: `1` | (`e[` label (`,` label)* `]` (`^` count)?)*, whitespace ignored.
fn parse_letters(src: &str) -> Result<Vec<(usize, Vec<Label>)>> {
    let trimmed = src.trim();
    if trimmed.is_empty() || trimmed == "1" {
        return Ok(Vec::new());
    }
    let bytes = src.as_bytes();
    let mut pos = 0;
    let mut out = Vec::new();
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    loop {
        skip_ws(&mut pos);
        if pos >= bytes.len() {
            break;
        }
        let start = pos;
        if bytes[pos] != b'e' {
            return Err(Error::parse(pos, "expected `e[`"));
        }
        pos += 1;
        skip_ws(&mut pos);
        if pos >= bytes.len() || bytes[pos] != b'[' {
            return Err(Error::parse(pos, "expected `[`"));
        }
        pos += 1;
        let close = src[pos..].find(']').ok_or_else(|| Error::parse(src.len(), "unclosed `[`"))?;
        let body = &src[pos..pos + close];
        let mut labels = Vec::new();
        let mut off = pos;
        for part in body.split(',') {
            if part.trim().is_empty() {
                return Err(Error::parse(off, "empty label"));
            }
            labels.push(part.trim().parse::<Label>().map_err(|e| shift(e, off))?);
            off += part.len() + 1;
        }
        pos += close + 1;
        skip_ws(&mut pos);
        let mut count = 1usize;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            skip_ws(&mut pos);
            let digits = bytes[pos..].iter().take_while(|b| b.is_ascii_digit()).count();
            if digits == 0 {
                return Err(Error::parse(pos, "expected exponent"));
            }
            count = src[pos..pos + digits]
                .parse()
                .map_err(|_| Error::parse(pos, "exponent too large"))?;
            pos += digits;
        }
        for _ in 0..count {
            out.push((start, labels.clone()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_word_dsl() {
        assert_eq!(Word::parse("e[1]e[0]^2").unwrap(), Word::ints(&[1, 0, 0]));
        assert_eq!(Word::parse(" e[-1] e[0] ").unwrap(), Word::ints(&[-1, 0]));
        assert_eq!(Word::parse("1").unwrap(), Word::empty());
        assert_eq!(Word::parse("").unwrap(), Word::empty());
        let half = Word::parse("e[1/2]").unwrap();
        assert_eq!(half.letters()[0], "1/2".parse().unwrap());
    }

    #[test]
    fn word_dsl_errors_carry_positions() {
        match Word::parse("e[2").unwrap_err() {
            Error::Parse { pos, .. } => assert_eq!(pos, 3),
            e => panic!("{e:?}"),
        }
        match Word::parse("e[1]x").unwrap_err() {
            Error::Parse { pos, .. } => assert_eq!(pos, 4),
            e => panic!("{e:?}"),
        }
        assert!(Word::parse("e[1,1]").is_err());
        assert!(Word::parse("e[1]^").is_err());
        assert!(Word::parse("e[]").is_err());
    }

    #[test]
    fn word_display_round_trips() {
        for w in [Word::ints(&[1, 0, 0, 1]), Word::empty(), Word::ints(&[-1, -1])] {
            assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
        }
        assert_eq!(Word::ints(&[1, 0, 0]).to_string(), "e[1]e[0]^2");
    }

    #[test]
    fn multiword_dsl() {
        let m = MultiWord::parse("e[1,1]e[0]").unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.letters()[0].labels().len(), 2);
        assert_eq!(m.to_string(), "e[1,1]e[0]");
        assert!(MultiLetter::new(vec![]).is_err());
    }

    #[test]
    fn alphabet_membership() {
        let d = Alphabet::parse("1, 0, -1, 0").unwrap();
        assert_eq!(d.len(), 3);
        assert!(d.contains(&Label::int(-1)));
        assert!(d.check(&Label::int(2)).is_err());
        assert!(d.check_word(&Word::ints(&[0, 1, 1])).is_ok());
    }
}
