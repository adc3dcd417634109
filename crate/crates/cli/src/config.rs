//! Optional `verify.toml` configuration: per-profile sweep-range overrides.
//!
//! Format (all keys optional, grouped by profile name):
//!
//! ```toml
//! [quick]
//! p_max_main = 31
//! adamchuk_primes = [7]
//!
//! [full]
//! p_max_3k1 = 499
//! comb_cases = 10
//! ```
//!
//! The file is looked up at `./verify.toml` in the working directory. The
//! only environment override is `VERIFY_WORKERS` (worker-pool size); sweep
//! ranges come exclusively from defaults and this file.

use crate::profiles::{Profile, ProfileOverrides};
use crate::CliError;
use serde::Deserialize;
use std::path::Path;

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default)]
    pub quick: ProfileOverrides,
    #[serde(default)]
    pub full: ProfileOverrides,
}

pub const DEFAULT_CONFIG_PATH: &str = "verify.toml";

pub fn load(path: &Path) -> Result<Config, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| CliError::BadArgs(format!("{}: {e}", path.display())))
}

/// Load `./verify.toml` when present; absent file means defaults.
pub fn load_default() -> Result<Option<Config>, CliError> {
    let path = Path::new(DEFAULT_CONFIG_PATH);
    if path.exists() {
        load(path).map(Some)
    } else {
        Ok(None)
    }
}

/// Apply the file's overrides (if any) to a named profile.
pub fn configured_profile(mut profile: Profile) -> Result<Profile, CliError> {
    if let Some(cfg) = load_default()? {
        let o = match profile.name.as_str() {
            "quick" => &cfg.quick,
            _ => &cfg.full,
        };
        profile.apply(o);
    }
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_apply() {
        let cfg: Config = toml::from_str(
            "[quick]\np_max_main = 31\n\n[full]\nadamchuk_primes = [7, 13]\ncomb_cases = 5\n",
        )
        .unwrap();
        let mut q = crate::profiles::quick();
        q.apply(&cfg.quick);
        assert_eq!(q.p_max_main, 31);
        let mut f = crate::profiles::full();
        f.apply(&cfg.full);
        assert_eq!(f.adamchuk_primes, vec![7, 13]);
        assert_eq!(f.comb_cases, 5);
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(toml::from_str::<Config>("[quick]\nbogus = 1\n").is_err());
    }
}
