//! Format patterns for synthesized identifiers.
//!
//! `#` any digit, `%` a non-zero digit, `?` an upper-case ASCII letter,
//! `\x` the literal `x`. Braced fields: `{d}` `{dd}` day (1-28), `{m}` `{mm}`
//! month, `{yyyy}` year (1930-2024), `{month}` `{mon}` English month name or
//! abbreviation, `{user}` and `{domain}` e-mail parts from the pool lists.
//! All date fields in one expansion describe the same date.

use rand::Rng;

const MONTHS: [&str; 12] = [
    "January",
    "February",
    "March",
    "April",
    "May",
    "June",
    "July",
    "August",
    "September",
    "October",
    "November",
    "December",
];

#[derive(Debug, Clone, PartialEq, Eq)]
enum Piece {
    Literal(String),
    Digit,
    NonZeroDigit,
    Upper,
    Day { padded: bool },
    Month { padded: bool },
    Year,
    MonthName { short: bool },
    User,
    Domain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    source: String,
    pieces: Vec<Piece>,
}

impl Pattern {
    pub fn parse(source: &str) -> Result<Pattern, String> {
        let mut pieces = Vec::new();
        let mut lit = String::new();
        let mut chars = source.chars().peekable();
        let flush = |lit: &mut String, pieces: &mut Vec<Piece>| {
            if !lit.is_empty() {
                pieces.push(Piece::Literal(std::mem::take(lit)));
            }
        };
        while let Some(c) = chars.next() {
            let piece = match c {
                '#' => Piece::Digit,
                '%' => Piece::NonZeroDigit,
                '?' => Piece::Upper,
                '\\' => {
                    let escaped = chars.next().ok_or("dangling escape")?;
                    lit.push(escaped);
                    continue;
                }
                '{' => {
                    let mut name = String::new();
                    loop {
                        match chars.next() {
                            Some('}') => break,
                            Some(ch) => name.push(ch),
                            None => return Err(format!("unterminated field in `{source}`")),
                        }
                    }
                    match name.as_str() {
                        "d" => Piece::Day { padded: false },
                        "dd" => Piece::Day { padded: true },
                        "m" => Piece::Month { padded: false },
                        "mm" => Piece::Month { padded: true },
                        "yyyy" => Piece::Year,
                        "month" => Piece::MonthName { short: false },
                        "mon" => Piece::MonthName { short: true },
                        "user" => Piece::User,
                        "domain" => Piece::Domain,
                        other => return Err(format!("unknown field `{{{other}}}` in `{source}`")),
                    }
                }
                other => {
                    lit.push(other);
                    continue;
                }
            };
            flush(&mut lit, &mut pieces);
            pieces.push(piece);
        }
        flush(&mut lit, &mut pieces);
        if pieces.is_empty() {
            return Err("empty pattern".into());
        }
        Ok(Pattern {
            source: source.to_string(),
            pieces,
        })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn needs_email_parts(&self) -> bool {
        self.pieces.iter().any(|p| matches!(p, Piece::User | Piece::Domain))
    }

    pub fn expand<R: Rng + ?Sized>(&self, rng: &mut R, users: &[String], domains: &[String]) -> String {
        let day: u32 = rng.random_range(1..=28);
        let month: usize = rng.random_range(1..=12);
        let year: u32 = rng.random_range(1930..=2024);
        let mut out = String::new();
        for piece in &self.pieces {
            match piece {
                Piece::Literal(s) => out.push_str(s),
                Piece::Digit => out.push(char::from(b'0' + rng.random_range(0..10u8))),
                Piece::NonZeroDigit => out.push(char::from(b'0' + rng.random_range(1..10u8))),
                Piece::Upper => out.push(char::from(b'A' + rng.random_range(0..26u8))),
                Piece::Day { padded: true } => out.push_str(&format!("{day:02}")),
                Piece::Day { padded: false } => out.push_str(&day.to_string()),
                Piece::Month { padded: true } => out.push_str(&format!("{month:02}")),
                Piece::Month { padded: false } => out.push_str(&month.to_string()),
                Piece::Year => out.push_str(&year.to_string()),
                Piece::MonthName { short: false } => out.push_str(MONTHS[month - 1]),
                Piece::MonthName { short: true } => out.push_str(&MONTHS[month - 1][..3]),
                Piece::User => out.push_str(&users[rng.random_range(0..users.len())]),
                Piece::Domain => out.push_str(&domains[rng.random_range(0..domains.len())]),
            }
        }
        out
    }
}
