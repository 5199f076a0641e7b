//! Scenarios shipped inside the binary.

pub struct Bundled {
    pub name: &'static str,
    pub text: &'static str,
}

macro_rules! bundled {
    ($($name:literal),* $(,)?) => {
        &[$(Bundled { name: $name, text: include_str!(concat!("../scenarios/", $name, ".scn")) }),*]
    };
}

pub const BUNDLED: &[Bundled] = bundled!(
    "fig1_entropy",
    "pair_equal_gaps",
    "pair_unequal_gaps",
    "fig4_blockade",
    "blockade_ge",
    "biased_freezing",
    "custom_partition",
);

pub fn find(name: &str) -> Option<&'static Bundled> {
    BUNDLED.iter().find(|b| b.name == name)
}
