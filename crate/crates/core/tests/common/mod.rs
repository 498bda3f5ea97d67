pub mod corpus;
pub mod dense;
