//! The plain-text document formats shared with the command-line tool.
//!
//! ```text
//! cargo run --example file_formats
//! ```

use drckit::algebra::ProjectionAlgebra;
use drckit::category::from_semigroup;
use drckit::docs::{parse, serialize, Document};
use drckit::semigroup::BiUnarySemigroup;

fn main() -> drckit::Result<()> {
    let alg = ProjectionAlgebra::chain_semilattice(2);
    let algebra_text = serialize(&Document::Algebra(alg.clone()));
    println!("algebra document:\n{algebra_text}");

    let s = BiUnarySemigroup::from_semilattice(&alg);
    let semigroup_text = serialize(&Document::Semigroup(s.clone()));
    println!("semigroup document:\n{semigroup_text}");

    let c = from_semigroup(&s)?;
    let category_text = serialize(&Document::Category(c));
    println!("category document:\n{category_text}");

    let word_text = serialize(&Document::Word(vec![1, 0, 1]));
    println!("word document:\n{word_text}");

    // parsing is the exact inverse, and whitespace is normalized
    for text in [&algebra_text, &semigroup_text, &category_text, &word_text] {
        let doc = parse(text)?;
        assert_eq!(&serialize(&doc), text);
    }
    let messy = algebra_text.replace('\n', "\n\n");
    assert_eq!(serialize(&parse(&messy)?), algebra_text);
    println!("round trips are exact");

    // parse errors carry line numbers
    match parse("drckit algebra v1\n2\n0 0\n") {
        Err(e) => println!("truncated file: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
