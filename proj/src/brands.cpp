// Implemented later in the build-up; placeholder translation unit.
