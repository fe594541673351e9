"""Rectangular permutations and their lift to Demazure data of double rank."""
