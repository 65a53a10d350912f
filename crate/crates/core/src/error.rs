use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse polynomial: unexpected token `{0}`")]
    PolyParse(String),

    #[error("cannot parse braid: {0}")]
    BraidParse(String),

    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("closure of the braid is a {components}-component link, not a knot")]
    NotAKnot { components: usize },

    #[error("color must be at least 1, got {0}")]
    InvalidColor(i64),

    #[error("evaluation at q = 0 is undefined for Laurent polynomials")]
    ZeroEvaluation,

    #[error("key length {found} does not match the {expected} crossings of the braid")]
    KeyLength { expected: usize, found: usize },

    #[error("matrix of dimension {0} has no reduced matrix")]
    NoMinor(usize),

    #[error("stack height exceeded the cap of {0}")]
    HeightCapExceeded(usize),

    #[error("unknown knot `{name}`{}", suggest(.near))]
    UnknownKnot { name: String, near: Vec<String> },

    #[error("knot table: {0}")]
    Table(String),
}

fn suggest(near: &[String]) -> String {
    if near.is_empty() {
        String::new()
    } else {
        format!("; did you mean {}?", near.join(", "))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
