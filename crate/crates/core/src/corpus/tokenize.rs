/// A surface token: a byte range of the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Token<'a> {
    pub text: &'a str,
    pub start: usize,
    pub end: usize,
}

/// Characters that always form a token on their own: ASCII punctuation,
/// general punctuation (dashes, quotes, ellipsis), CJK and full-width
/// punctuation, Devanagari dandas, and a few Latin-1 marks.
pub fn is_separator_punct(c: char) -> bool {
    c.is_ascii_punctuation()
        || matches!(c,
            '\u{2010}'..='\u{2027}'
            | '\u{2030}'..='\u{205E}'
            | '\u{3001}'..='\u{3003}'
            | '\u{3008}'..='\u{3011}'
            | '\u{3014}'..='\u{301F}'
            | '\u{FF01}'..='\u{FF0F}'
            | '\u{FF1A}'..='\u{FF20}'
            | '\u{FF3B}'..='\u{FF40}'
            | '\u{FF5B}'..='\u{FF65}'
            | '\u{0964}' | '\u{0965}'
            | '¡' | '¿' | '«' | '»' | '·' | '§' | '¶' | '°')
}

/// Splits on whitespace, then isolates every punctuation character as its
/// own token. Offsets index into `text`.
pub fn tokenize(text: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let mut run_start: Option<usize> = None;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() || is_separator_punct(c) {
            if let Some(s) = run_start.take() {
                tokens.push(Token { text: &text[s..i], start: s, end: i });
            }
            if !c.is_whitespace() {
                let end = i + c.len_utf8();
                tokens.push(Token { text: &text[i..end], start: i, end });
            }
        } else if run_start.is_none() {
            run_start = Some(i);
        }
    }
    if let Some(s) = run_start {
        tokens.push(Token { text: &text[s..], start: s, end: text.len() });
    }
    tokens
}
