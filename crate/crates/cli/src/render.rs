//! Braid diagrams drawn from words: one crossing row per letter, strands
//! numbered left to right, time running downwards. `σ_i` draws strand
//! `i+1` over strand `i`.

use garside::{GarsideError, Result, Word};

const SPACING: usize = 40;
const ROW: usize = 40;
const MARGIN: usize = 20;
const GAP: usize = 6;

fn check(w: &Word, strands: usize, highlight: Option<(usize, usize)>) -> Result<()> {
    if strands < 2 {
        return Err(GarsideError::WrongContext("a braid context".into()));
    }
    w.check_atoms(strands - 1)?;
    if let Some((i, j)) = highlight {
        for k in [i, j] {
            if k >= w.len() {
                return Err(GarsideError::IndexOutOfRange { index: k, len: w.len() });
            }
        }
        if i >= j {
            return Err(GarsideError::Precondition(format!("highlight needs i < j, got ({i}, {j})")));
        }
    }
    Ok(())
}

fn marked(highlight: Option<(usize, usize)>, row: usize) -> bool {
    highlight.is_some_and(|(i, j)| row == i || row == j)
}

/// Text diagram: `/` for a positive crossing, `\` for a negative one, `<`
/// after a highlighted row.
pub fn ascii(w: &Word, strands: usize, highlight: Option<(usize, usize)>) -> Result<String> {
    check(w, strands, highlight)?;
    let width = 2 * strands - 1;
    let plain: String = (0..width).map(|c| if c % 2 == 0 { '|' } else { ' ' }).collect();
    let mut out = format!("    {plain}\n");
    for (row, l) in w.iter().enumerate() {
        let mut cells: Vec<char> = plain.chars().collect();
        let left = 2 * l.atom0();
        cells[left] = ' ';
        cells[left + 2] = ' ';
        cells[left + 1] = if l.is_positive() { '/' } else { '\\' };
        let line: String = cells.into_iter().collect();
        let mark = if marked(highlight, row) { "  <" } else { "" };
        out.push_str(&format!("{row:>3} {line}{mark}\n"));
    }
    out.push_str(&format!("    {plain}\n"));
    Ok(out)
}

fn x_of(strand: usize) -> usize {
    MARGIN + strand * SPACING
}

fn line(x1: usize, y1: usize, x2: usize, y2: usize) -> String {
    format!("  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"/>\n")
}

/// SVG diagram with fixed strand spacing and one cell per crossing.
pub fn svg(w: &Word, strands: usize, highlight: Option<(usize, usize)>) -> Result<String> {
    check(w, strands, highlight)?;
    let rows = w.len().max(1);
    let width = 2 * MARGIN + (strands - 1) * SPACING;
    let height = 2 * MARGIN + rows * ROW;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    );
    for row in 0..w.len() {
        if marked(highlight, row) {
            let y = MARGIN + row * ROW;
            out.push_str(&format!(
                "<rect x=\"0\" y=\"{y}\" width=\"{width}\" height=\"{ROW}\" fill=\"#ffe08a\"/>\n"
            ));
        }
    }
    out.push_str("<g stroke=\"black\" stroke-width=\"3\" stroke-linecap=\"round\">\n");
    if w.is_empty() {
        for s in 0..strands {
            out.push_str(&line(x_of(s), MARGIN, x_of(s), MARGIN + ROW));
        }
    }
    for (row, l) in w.iter().enumerate() {
        let (y0, y1) = (MARGIN + row * ROW, MARGIN + (row + 1) * ROW);
        let a = l.atom0();
        for s in (0..strands).filter(|&s| s != a && s != a + 1) {
            out.push_str(&line(x_of(s), y0, x_of(s), y1));
        }
        // over strand drawn whole, under strand broken around the centre
        let (over, under) = if l.is_positive() {
            ((x_of(a + 1), x_of(a)), (x_of(a), x_of(a + 1)))
        } else {
            ((x_of(a), x_of(a + 1)), (x_of(a + 1), x_of(a)))
        };
        out.push_str(&line(over.0, y0, over.1, y1));
        let (xm, ym) = ((under.0 + under.1) / 2, (y0 + y1) / 2);
        let offset = GAP;
        let toward = |from: usize, to: usize| if to > from { to - offset } else { to + offset };
        out.push_str(&line(under.0, y0, toward(under.0, xm), ym - offset));
        out.push_str(&line(toward(under.1, xm), ym + offset, under.1, y1));
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn ascii_crossings() {
        let text = ascii(&w("aA"), 3, None).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines, vec!["    | | |", "  0  /  |", "  1  \\  |", "    | | |"]);
        let empty = ascii(&w(""), 4, None).unwrap();
        assert_eq!(empty, "    | | | |\n    | | | |\n");
    }

    #[test]
    fn highlight_marks_rows() {
        let text = ascii(&w("abAB"), 3, Some((0, 2))).unwrap();
        let marked: Vec<usize> = text.lines().enumerate().filter(|(_, l)| l.ends_with('<')).map(|(k, _)| k - 1).collect();
        assert_eq!(marked, vec![0, 2]);
        assert!(ascii(&w("ab"), 3, Some((0, 5))).is_err());
        assert!(ascii(&w("ab"), 3, Some((1, 1))).is_err());
    }

    #[test]
    fn rejects_atoms_beyond_the_strands() {
        assert!(ascii(&w("c"), 3, None).is_err());
        assert!(svg(&w("a"), 1, None).is_err());
    }

    #[test]
    fn svg_has_one_cell_per_letter() {
        let s = svg(&w("abA"), 3, Some((0, 2))).unwrap();
        assert_eq!(s.matches("<rect").count(), 2);
        assert!(s.contains("height=\"160\""));
        assert_eq!(s.matches("<line").count(), 3 * 4);
    }
}
