# Source module - BettiLab
