pub mod algebra;
pub mod descent;
pub mod family;
pub mod group;
pub mod json;
pub mod monodromy;
pub mod nielsen;
pub mod perm;
pub mod specialize;
