//! Executable admissible structural transformations.
