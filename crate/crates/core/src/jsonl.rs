//! JSON-lines serialization.
//!
//! Every stream starts with one header object
//! `{"kind": .., "n": .., "q": .., "count": ..}` (plus `m`, `k` and
//! `diagonal` where they apply) followed by one record per line:
//!
//! * sets of matrices: the row strings, e.g. `["10","00"]`
//! * sets of words: the digit string, e.g. `"1000"`
//! * Gray listings: `{"seq": 0, "item": ..}` with consecutive `seq`
//! * verdict witnesses: `{"reason": "expanding-witness", "matrix": [..]}` or
//!   `{"reason": "cross-conflict-pair", "matrices": [[..], [..]]}`

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::codes::RectMatrix;
use crate::generation::MatrixSet;
use crate::matrices::SquareMatrix;
use crate::words::{Word, WordCode};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub kind: String,
    pub n: usize,
    pub q: u8,
    pub count: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagonal: Option<Vec<String>>,
}

impl Header {
    pub fn new(kind: &str, n: usize, q: u8, count: u64) -> Self {
        Header {
            kind: kind.to_string(),
            n,
            q,
            count,
            m: None,
            k: None,
            diagonal: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Seq<T> {
    seq: u64,
    item: T,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum Witness {
    ExpandingWitness { matrix: Vec<String> },
    CrossConflictPair { matrices: [Vec<String>; 2] },
}

impl Witness {
    pub fn expanding(m: &SquareMatrix) -> Self {
        Witness::ExpandingWitness {
            matrix: m.row_strings(),
        }
    }

    pub fn conflict(a: &[String], b: &[String]) -> Self {
        Witness::CrossConflictPair {
            matrices: [a.to_vec(), b.to_vec()],
        }
    }
}

fn line<W: Write + ?Sized, T: Serialize + ?Sized>(out: &mut W, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value).map_err(std::io::Error::from)?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn write_header<W: Write + ?Sized>(out: &mut W, header: &Header) -> Result<()> {
    line(out, header)
}

pub fn write_witness<W: Write + ?Sized>(out: &mut W, witness: &Witness) -> Result<()> {
    line(out, witness)
}

/// Header followed by one row-string array per matrix.
pub fn write_matrices<'a, W: Write + ?Sized>(
    out: &mut W,
    header: &Header,
    items: impl IntoIterator<Item = &'a SquareMatrix>,
) -> Result<()> {
    write_header(out, header)?;
    for m in items {
        line(out, &m.row_strings())?;
    }
    Ok(())
}

pub fn write_matrix_set<W: Write + ?Sized>(out: &mut W, kind: &str, set: &MatrixSet) -> Result<()> {
    let header = Header::new(kind, set.n(), set.q(), set.len() as u64);
    write_matrices(out, &header, set.iter())
}

pub fn write_rect_set<W: Write + ?Sized>(
    out: &mut W,
    header: &Header,
    items: &[RectMatrix],
) -> Result<()> {
    write_header(out, header)?;
    for m in items {
        line(out, &m.row_strings())?;
    }
    Ok(())
}

pub fn write_word_code<W: Write + ?Sized>(
    out: &mut W,
    header: &Header,
    code: &WordCode,
) -> Result<()> {
    write_header(out, header)?;
    for w in code {
        line(out, &w.to_string())?;
    }
    Ok(())
}

/// Header followed by `{"seq", "item"}` records for a matrix listing.
pub fn write_matrix_listing<W: Write + ?Sized>(
    out: &mut W,
    header: &Header,
    items: impl IntoIterator<Item = SquareMatrix>,
) -> Result<u64> {
    write_header(out, header)?;
    let mut seq = 0;
    for m in items {
        line(
            out,
            &Seq {
                seq,
                item: m.row_strings(),
            },
        )?;
        seq += 1;
    }
    Ok(seq)
}

pub fn write_word_listing<W: Write + ?Sized>(
    out: &mut W,
    header: &Header,
    items: impl IntoIterator<Item = Word>,
) -> Result<u64> {
    write_header(out, header)?;
    let mut seq = 0;
    for w in items {
        line(
            out,
            &Seq {
                seq,
                item: w.to_string(),
            },
        )?;
        seq += 1;
    }
    Ok(seq)
}

fn parse_line<T: for<'de> Deserialize<'de>>(text: &str, lineno: usize) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {lineno}: {e}")))
}

struct Lines<R> {
    inner: std::io::Lines<R>,
    lineno: usize,
}

impl<R: BufRead> Lines<R> {
    fn new(r: R) -> Self {
        Lines {
            inner: r.lines(),
            lineno: 0,
        }
    }

    fn header(&mut self) -> Result<Header> {
        let (no, text) = self
            .next_line()?
            .ok_or_else(|| Error::Parse("missing header line".into()))?;
        parse_line(&text, no)
    }

    fn next_line(&mut self) -> Result<Option<(usize, String)>> {
        loop {
            match self.inner.next() {
                None => return Ok(None),
                Some(l) => {
                    self.lineno += 1;
                    let l = l?;
                    if !l.trim().is_empty() {
                        return Ok(Some((self.lineno, l)));
                    }
                }
            }
        }
    }

    fn records<T: for<'de> Deserialize<'de>>(&mut self) -> Result<Vec<T>> {
        let mut out = Vec::new();
        while let Some((no, text)) = self.next_line()? {
            out.push(parse_line(&text, no)?);
        }
        Ok(out)
    }
}

fn check_count(header: &Header, got: usize) -> Result<()> {
    if header.count != got as u64 {
        return Err(Error::Parse(format!(
            "header announces {} records, stream has {got}",
            header.count
        )));
    }
    Ok(())
}

pub fn read_matrix_set<R: BufRead>(r: R) -> Result<(Header, MatrixSet)> {
    let mut lines = Lines::new(r);
    let header = lines.header()?;
    let rows: Vec<Vec<String>> = lines.records()?;
    check_count(&header, rows.len())?;
    let members = rows
        .iter()
        .map(|r| SquareMatrix::parse_rows(r, header.q))
        .collect::<Result<Vec<_>>>()?;
    let set = MatrixSet::new(header.n, header.q, members)?;
    check_count(&header, set.len())?;
    Ok((header, set))
}

pub fn read_rect_set<R: BufRead>(r: R) -> Result<(Header, Vec<RectMatrix>)> {
    let mut lines = Lines::new(r);
    let header = lines.header()?;
    let rows: Vec<Vec<String>> = lines.records()?;
    check_count(&header, rows.len())?;
    let items = rows
        .iter()
        .map(|r| RectMatrix::parse(&r.join("/"), header.q))
        .collect::<Result<Vec<_>>>()?;
    Ok((header, items))
}

pub fn read_word_code<R: BufRead>(r: R) -> Result<(Header, WordCode)> {
    let mut lines = Lines::new(r);
    let header = lines.header()?;
    let words: Vec<String> = lines.records()?;
    check_count(&header, words.len())?;
    let words = words
        .iter()
        .map(|w| Word::parse(w, header.q))
        .collect::<Result<Vec<_>>>()?;
    Ok((header.clone(), WordCode::new(header.n, header.q, words)?))
}

fn read_seq<R: BufRead, T: for<'de> Deserialize<'de>>(r: R) -> Result<(Header, Vec<T>)> {
    let mut lines = Lines::new(r);
    let header = lines.header()?;
    let records: Vec<Seq<T>> = lines.records()?;
    for (i, rec) in records.iter().enumerate() {
        if rec.seq != i as u64 {
            return Err(Error::Parse(format!("record {i} carries seq {}", rec.seq)));
        }
    }
    check_count(&header, records.len())?;
    Ok((header, records.into_iter().map(|r| r.item).collect()))
}

pub fn read_matrix_listing<R: BufRead>(r: R) -> Result<(Header, Vec<SquareMatrix>)> {
    let (header, rows) = read_seq::<_, Vec<String>>(r)?;
    let items = rows
        .iter()
        .map(|r| SquareMatrix::parse_rows(r, header.q))
        .collect::<Result<Vec<_>>>()?;
    Ok((header, items))
}

pub fn read_word_listing<R: BufRead>(r: R) -> Result<(Header, Vec<Word>)> {
    let (header, words) = read_seq::<_, String>(r)?;
    let items = words
        .iter()
        .map(|w| Word::parse(w, header.q))
        .collect::<Result<Vec<_>>>()?;
    Ok((header, items))
}
