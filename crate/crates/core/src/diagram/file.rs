//! Link files: `#` comments and one `name := code` entry per line.

use thiserror::Error;

use super::{parse_gauss_code, DiagramError, LinkDiagram};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedLink {
    pub name: String,
    pub diagram: LinkDiagram,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkFileError {
    #[error("line {line}: expected `name := code`")]
    MissingSeparator { line: usize },
    #[error("line {line}: empty link name")]
    EmptyName { line: usize },
    #[error("line {line}: duplicate link name {name:?}")]
    DuplicateName { line: usize, name: String },
    #[error("line {line}: {source}")]
    Code { line: usize, source: DiagramError },
}

pub fn parse_link_file(text: &str) -> Result<Vec<NamedLink>, LinkFileError> {
    let mut links: Vec<NamedLink> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (name, code) = trimmed
            .split_once(":=")
            .ok_or(LinkFileError::MissingSeparator { line })?;
        let name = name.trim();
        if name.is_empty() {
            return Err(LinkFileError::EmptyName { line });
        }
        if links.iter().any(|l| l.name == name) {
            return Err(LinkFileError::DuplicateName {
                line,
                name: name.to_string(),
            });
        }
        let diagram = parse_gauss_code(code).map_err(|source| LinkFileError::Code { line, source })?;
        links.push(NamedLink {
            name: name.to_string(),
            diagram,
        });
    }
    Ok(links)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_entries_and_skips_comments() {
        let text = "# links\n\nvhopf := O1+ / U1+\nunknot := -\n";
        let links = parse_link_file(text).unwrap();
        assert_eq!(links.len(), 2);
        assert_eq!(links[0].name, "vhopf");
        assert_eq!(links[1].diagram.semiarc_count(), 1);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_link_file("a := -\nb -"),
            Err(LinkFileError::MissingSeparator { line: 2 })
        );
        assert_eq!(
            parse_link_file(" := -"),
            Err(LinkFileError::EmptyName { line: 1 })
        );
        assert!(matches!(
            parse_link_file("a := -\na := - / -"),
            Err(LinkFileError::DuplicateName { line: 2, .. })
        ));
        assert!(matches!(
            parse_link_file("\nk := O1+ U2+"),
            Err(LinkFileError::Code {
                line: 2,
                source: DiagramError::CrossingUsedWrong(1)
            })
        ));
    }
}
