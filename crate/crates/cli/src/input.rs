use std::fs;

use cycle_endo::{CycleContext, DihedralElement, Transformation};

use crate::{Failure, Maps};

/// Parses image lists ("1 2 1 2") or dihedral names ("g^3", "h*g^2", "id").
pub fn parse_map(ctx: &CycleContext, text: &str) -> Result<Transformation, Failure> {
    let trimmed = text.trim();
    if trimmed.contains(['g', 'h']) || trimmed == "id" {
        return Ok(DihedralElement::parse(trimmed, ctx.n())?.to_transformation());
    }
    Ok(ctx.parse(trimmed)?)
}

/// Maps given on the command line, with their source text. `None` when no
/// map was given at all.
pub fn read_maps(ctx: &CycleContext, maps: &Maps) -> Result<Option<Vec<(String, Transformation)>>, Failure> {
    if let Some(text) = &maps.map {
        return Ok(Some(vec![(text.trim().to_string(), parse_map(ctx, text)?)]));
    }
    let Some(path) = &maps.input else {
        return Ok(None);
    };
    let contents = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    contents
        .lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
        .map(|line| Ok((line.to_string(), parse_map(ctx, line)?)))
        .collect::<Result<Vec<_>, Failure>>()
        .map(Some)
}
