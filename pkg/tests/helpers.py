from brinthompson import random_element


def rand2(seed, depth=3, twisted=False):
    return random_element(seed, 2, depth, [(1, 0)] if twisted else None)
