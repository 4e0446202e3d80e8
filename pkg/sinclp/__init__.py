"""The sinc L_p integral, its bounds, and exact symmetric B-splines."""
