use crate::channel::QuditState;
use crate::error::{Error, Result};

/// Built-in states: equal superpositions of `d` consecutive OAM values from 4.
pub const PRESET_NAMES: [&str; 4] = [
    "d2-uniform-base4",
    "d3-uniform-base4",
    "d4-uniform-base4",
    "d5-uniform-base4",
];

pub fn preset(name: &str) -> Result<QuditState> {
    let d = match name {
        "d2-uniform-base4" => 2,
        "d3-uniform-base4" => 3,
        "d4-uniform-base4" => 4,
        "d5-uniform-base4" => 5,
        _ => {
            return Err(Error::InvalidInput(format!(
                "unknown state preset '{name}' (known: {})",
                PRESET_NAMES.join(", ")
            )))
        }
    };
    QuditState::uniform(d, 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_are_uniform_from_four() {
        for (i, name) in PRESET_NAMES.iter().enumerate() {
            let s = preset(name).unwrap();
            assert_eq!(s.dim(), i + 2);
            assert_eq!(s.base(), 4);
        }
        assert!(preset("d6-uniform-base4").is_err());
    }
}
