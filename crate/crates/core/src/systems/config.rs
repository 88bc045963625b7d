use serde::{Deserialize, Serialize};

use crate::circle::Theta;
use crate::error::{Error, Result};

use super::{DenjoyFlip, DoubledSystem, Odometer};

/// Wire description of a system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum SystemSpec {
    DenjoyFlip { theta: Theta },
    Odometer { chain: ChainSpec },
    Doubled { theta: Theta },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ChainSpec {
    List(Vec<u64>),
    Generated(GeneratedChain),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratedChain {
    pub base: u64,
    pub growth: Growth,
    pub levels: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Growth {
    Geometric,
}

#[derive(Clone, Debug)]
pub enum System {
    DenjoyFlip(DenjoyFlip),
    Odometer(Odometer),
    Doubled(DoubledSystem),
}

impl SystemSpec {
    pub fn build(&self) -> Result<System> {
        Ok(match self {
            SystemSpec::DenjoyFlip { theta } => System::DenjoyFlip(DenjoyFlip::new(*theta)),
            SystemSpec::Doubled { theta } => System::Doubled(DoubledSystem::new(*theta)),
            SystemSpec::Odometer { chain } => System::Odometer(match chain {
                ChainSpec::List(v) => Odometer::new(v.clone())?,
                ChainSpec::Generated(g) => Odometer::geometric(g.base, g.levels)?,
            }),
        })
    }

    pub fn from_json(text: &str) -> Result<SystemSpec> {
        let spec: SystemSpec =
            serde_json::from_str(text).map_err(|e| Error::Config(format!("system description: {e}")))?;
        spec.build().map_err(|e| Error::Config(e.to_string()))?;
        Ok(spec)
    }

    pub fn golden_denjoy() -> SystemSpec {
        SystemSpec::DenjoyFlip { theta: Theta::golden() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_shapes() {
        let d = SystemSpec::from_json(r#"{"type":"denjoy_flip","theta":{"p":-1,"q":1,"d":5,"r":2}}"#).unwrap();
        assert_eq!(d, SystemSpec::golden_denjoy());
        let o = SystemSpec::from_json(r#"{"type":"odometer","chain":[2,4,8]}"#).unwrap();
        assert!(matches!(o.build().unwrap(), System::Odometer(_)));
        let g =
            SystemSpec::from_json(r#"{"type":"odometer","chain":{"base":3,"growth":"geometric","levels":5}}"#).unwrap();
        match g.build().unwrap() {
            System::Odometer(od) => assert_eq!(od.chain(), &[3, 9, 27, 81, 243]),
            _ => unreachable!(),
        }
        assert!(SystemSpec::from_json(r#"{"type":"doubled","theta":{"p":-1,"q":1,"d":5,"r":2}}"#).is_ok());
    }

    #[test]
    fn strict_parsing() {
        assert!(SystemSpec::from_json(r#"{"type":"denjoy_flip","theta":{"p":-1,"q":1,"d":5,"r":2},"x":1}"#).is_err());
        assert!(SystemSpec::from_json(r#"{"type":"odometer","chain":[4,4]}"#).is_err());
        assert!(SystemSpec::from_json(
            r#"{"type":"odometer","chain":{"base":3,"growth":"geometric","levels":5,"y":0}}"#
        )
        .is_err());
        assert!(SystemSpec::from_json(r#"{"type":"torus"}"#).is_err());
        let rt = serde_json::to_string(&SystemSpec::golden_denjoy()).unwrap();
        assert_eq!(SystemSpec::from_json(&rt).unwrap(), SystemSpec::golden_denjoy());
    }
}
