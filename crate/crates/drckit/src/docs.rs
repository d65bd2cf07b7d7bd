//! Plain-text document formats.
//!
//! Every file opens with a header line `drckit <kind> v1`; integers are
//! decimal, whitespace-separated, line-oriented. Serialization is
//! deterministic, so identical values produce byte-identical files.

use std::collections::BTreeMap;

use crate::algebra::ProjectionAlgebra;
use crate::category::FiniteOrderedCategory;
use crate::error::{Error, Result};
use crate::semigroup::BiUnarySemigroup;

#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Algebra(ProjectionAlgebra),
    Semigroup(BiUnarySemigroup),
    Category(FiniteOrderedCategory),
    Word(Vec<usize>),
}

struct Lines<'a> {
    lines: std::iter::Enumerate<std::str::Lines<'a>>,
    current: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            lines: text.lines().enumerate(),
            current: 0,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.current,
            msg: msg.into(),
        }
    }

    /// Next non-blank line.
    fn next_line(&mut self, what: &str) -> Result<&'a str> {
        for (i, line) in self.lines.by_ref() {
            self.current = i + 1;
            if !line.trim().is_empty() {
                return Ok(line);
            }
        }
        Err(Error::Parse {
            line: self.current + 1,
            msg: format!("missing {what}"),
        })
    }

    fn ints(&mut self, what: &str) -> Result<Vec<usize>> {
        let line = self.next_line(what)?;
        let current = self.current;
        line.split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: current,
                    msg: format!("expected an integer in {what}, got {tok:?}"),
                })
            })
            .collect()
    }

    fn fixed_ints(&mut self, count: usize, what: &str) -> Result<Vec<usize>> {
        let row = self.ints(what)?;
        if row.len() != count {
            return Err(self.err(format!("{what} needs {count} integers, got {}", row.len())));
        }
        Ok(row)
    }

    fn one_int(&mut self, what: &str) -> Result<usize> {
        Ok(self.fixed_ints(1, what)?[0])
    }

    fn table(&mut self, rows: usize, cols: usize, what: &str) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            out.extend(self.fixed_ints(cols, &format!("row {r} of {what}"))?);
        }
        Ok(out)
    }
}

pub fn parse(text: &str) -> Result<Document> {
    let mut lines = Lines::new(text);
    let header = lines.next_line("header")?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("drckit") {
        return Err(lines.err("header must start with 'drckit'"));
    }
    let kind = parts.next().unwrap_or("");
    if parts.next() != Some("v1") || parts.next().is_some() {
        return Err(lines.err("header must end with version 'v1'"));
    }
    match kind {
        "algebra" => {
            let n = lines.one_int("carrier size")?;
            let times = lines.table(n, n, "the × table")?;
            let star = lines.table(n, n, "the ⋆ table")?;
            Ok(Document::Algebra(ProjectionAlgebra::new(n, times, star)?))
        }
        "semigroup" => {
            let n = lines.one_int("carrier size")?;
            let mul = lines.table(n, n, "the multiplication table")?;
            let plus = lines.fixed_ints(n, "the ⁺ row")?;
            let star = lines.fixed_ints(n, "the * row")?;
            Ok(Document::Semigroup(BiUnarySemigroup::new(
                n, mul, plus, star,
            )?))
        }
        "category" => {
            let m = lines.one_int("arrow count")?;
            let dom = lines.fixed_ints(m, "the d row")?;
            let cod = lines.fixed_ints(m, "the r row")?;
            let n_comp = lines.one_int("composition count")?;
            let mut comp = BTreeMap::new();
            for i in 0..n_comp {
                let t = lines.fixed_ints(3, &format!("composition triple {i}"))?;
                comp.insert((t[0], t[1]), t[2]);
            }
            let n_leq = lines.one_int("order-pair count")?;
            let mut leq = Vec::with_capacity(n_leq);
            for i in 0..n_leq {
                let t = lines.fixed_ints(2, &format!("order pair {i}"))?;
                leq.push((t[0], t[1]));
            }
            let n_obj = lines.one_int("object count")?;
            let objects = lines.fixed_ints(n_obj, "the object list")?;
            let obj_times = lines.table(n_obj, n_obj, "the object × table")?;
            let obj_star = lines.table(n_obj, n_obj, "the object ⋆ table")?;
            let n_eval = lines.one_int("evaluation count")?;
            let mut eval = BTreeMap::new();
            for i in 0..n_eval {
                let row = lines.ints(&format!("evaluation entry {i}"))?;
                if row.len() < 2 || row.len() != row[0] + 2 {
                    return Err(lines.err(format!(
                        "evaluation entry {i} must read: length, path, arrow"
                    )));
                }
                let k = row[0];
                eval.insert(row[1..1 + k].to_vec(), row[1 + k]);
            }
            Ok(Document::Category(FiniteOrderedCategory::new(
                m, comp, dom, cod, &leq, objects, obj_times, obj_star, eval,
            )?))
        }
        "word" => {
            let letters = lines.ints("the word")?;
            if letters.is_empty() {
                return Err(lines.err("a word must be nonempty"));
            }
            Ok(Document::Word(letters))
        }
        other => Err(lines.err(format!("unknown document kind {other:?}"))),
    }
}

pub fn serialize(doc: &Document) -> String {
    let mut out = String::new();
    let push_row = |out: &mut String, row: &[usize]| {
        let strs: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&strs.join(" "));
        out.push('\n');
    };
    match doc {
        Document::Algebra(alg) => {
            out.push_str("drckit algebra v1\n");
            let n = alg.len();
            push_row(&mut out, &[n]);
            for r in 0..n {
                push_row(&mut out, &alg.times_table()[r * n..(r + 1) * n]);
            }
            for r in 0..n {
                push_row(&mut out, &alg.star_table()[r * n..(r + 1) * n]);
            }
        }
        Document::Semigroup(s) => {
            out.push_str("drckit semigroup v1\n");
            let n = s.len();
            push_row(&mut out, &[n]);
            for r in 0..n {
                push_row(&mut out, &s.mul_table()[r * n..(r + 1) * n]);
            }
            push_row(&mut out, s.plus_table());
            push_row(&mut out, s.star_table());
        }
        Document::Category(c) => {
            out.push_str("drckit category v1\n");
            let m = c.arrow_count();
            push_row(&mut out, &[m]);
            push_row(&mut out, c.dom_row());
            push_row(&mut out, c.cod_row());
            push_row(&mut out, &[c.comp_table().len()]);
            for (&(a, b), &v) in c.comp_table() {
                push_row(&mut out, &[a, b, v]);
            }
            let leq = c.leq_pairs();
            push_row(&mut out, &[leq.len()]);
            for (a, b) in leq {
                push_row(&mut out, &[a, b]);
            }
            let k = c.objects().len();
            push_row(&mut out, &[k]);
            push_row(&mut out, c.objects());
            for r in 0..k {
                push_row(&mut out, &c.obj_times_table()[r * k..(r + 1) * k]);
            }
            for r in 0..k {
                push_row(&mut out, &c.obj_star_table()[r * k..(r + 1) * k]);
            }
            push_row(&mut out, &[c.eval_table().len()]);
            for (path, &a) in c.eval_table() {
                let mut row = vec![path.len()];
                row.extend_from_slice(path);
                row.push(a);
                push_row(&mut out, &row);
            }
        }
        Document::Word(w) => {
            out.push_str("drckit word v1\n");
            push_row(&mut out, w);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_element_algebra_round_trip() {
        let text = "drckit algebra v1\n1\n0\n0\n";
        let doc = parse(text).unwrap();
        match &doc {
            Document::Algebra(a) => assert_eq!(a.len(), 1),
            _ => panic!("wrong kind"),
        }
        assert_eq!(serialize(&doc), text);
    }

    #[test]
    fn whitespace_is_normalized() {
        let messy = "drckit algebra v1\n\n 1 \n0\n\n0\n";
        let doc = parse(messy).unwrap();
        assert_eq!(serialize(&doc), "drckit algebra v1\n1\n0\n0\n");
    }

    #[test]
    fn truncated_table_names_position() {
        let text = "drckit algebra v1\n2\n0 0\n";
        match parse(text) {
            Err(Error::Parse { line, msg }) => {
                assert!(line >= 3, "line {line}");
                assert!(msg.contains("row 1"), "{msg}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn bad_header_rejected() {
        assert!(parse("nonsense\n").is_err());
        assert!(parse("drckit algebra v2\n1\n0\n0\n").is_err());
        assert!(parse("drckit thing v1\n").is_err());
    }

    #[test]
    fn word_round_trip() {
        let doc = parse("drckit word v1\n0 1 2 1\n").unwrap();
        assert_eq!(doc, Document::Word(vec![0, 1, 2, 1]));
    }

    #[test]
    fn semigroup_and_category_round_trip() {
        let s = BiUnarySemigroup::from_semilattice(&ProjectionAlgebra::chain_semilattice(2));
        let text = serialize(&Document::Semigroup(s.clone()));
        assert_eq!(parse(&text).unwrap(), Document::Semigroup(s.clone()));

        let c = crate::category::from_semigroup(&s).unwrap();
        let text = serialize(&Document::Category(c.clone()));
        assert_eq!(parse(&text).unwrap(), Document::Category(c));
    }
}
