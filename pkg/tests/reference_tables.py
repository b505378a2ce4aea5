"""Published values used as acceptance targets."""

# Maximal multiplicity of a character degree of S_n.
MAX_MULTIPLICITY = {
    2: 2, 3: 2, 4: 2, 5: 2, 6: 4, 7: 4, 8: 2, 9: 3,
    10: 2, 11: 4, 12: 4, 13: 6, 14: 6, 15: 6, 16: 4, 17: 8,
    18: 6, 19: 10, 20: 6, 21: 8, 22: 8, 23: 12, 24: 8, 25: 12,
    26: 12, 27: 10, 28: 12, 29: 22, 30: 14, 31: 12, 32: 12, 33: 16,
    34: 18, 35: 30, 36: 14, 37: 20, 38: 26, 39: 16, 40: 20, 41: 22,
    42: 20, 43: 26, 44: 25, 45: 24, 46: 24, 47: 32, 48: 16, 49: 32,
    50: 30, 51: 26, 52: 24, 53: 32, 54: 32, 55: 40, 56: 32, 57: 34,
    58: 32, 59: 32, 60: 34, 61: 44, 62: 30, 63: 44, 64: 36, 65: 52,
    66: 34, 67: 54, 68: 38, 69: 56, 70: 50, 71: 48, 72: 44, 73: 50,
    74: 44, 75: 58, 76: 46, 77: 60, 78: 48, 79: 58, 80: 64, 81: 72,
    82: 56, 83: 58, 84: 66, 85: 86, 86: 68, 87: 86, 88: 78, 89: 94,
    90: 102, 91: 84, 92: 84, 93: 94, 94: 80, 95: 104, 96: 96, 97: 104,
    98: 104, 99: 96, 100: 104, 101: 110, 102: 106, 103: 112, 104: 102, 105: 146,
    106: 104, 107: 120, 108: 114, 109: 132, 110: 126, 111: 136, 112: 126, 113: 130,
    114: 108, 115: 144, 116: 120, 117: 172, 118: 114, 119: 142, 120: 158, 121: 160,
    122: 140, 123: 176, 124: 178, 125: 188, 126: 194, 127: 164, 128: 174, 129: 224,
}

# Unordered pairs {lam, lam'} of distinct conjugates with equal a-value.
A_PAIRS = {
    15: 1, 16: 2, 17: 0, 18: 0, 19: 1, 20: 1, 21: 5, 22: 1,
    23: 0, 24: 7, 25: 8, 26: 1, 27: 5, 28: 13, 29: 6, 30: 10,
    31: 10, 32: 17, 33: 30, 34: 11, 35: 25, 36: 57, 37: 33, 38: 21,
    39: 49, 40: 93, 41: 64, 42: 60, 43: 93, 44: 108, 45: 172, 46: 111,
    47: 102, 48: 293, 49: 284, 50: 172, 51: 311, 52: 412, 53: 380, 54: 373,
    55: 500, 56: 711, 57: 786, 58: 605, 59: 695, 60: 1331, 61: 1241, 62: 831,
    63: 1477, 64: 2106, 65: 1970, 66: 1900, 67: 2221, 68: 2947, 69: 3470, 70: 3096,
    71: 3422, 72: 5340, 73: 5478, 74: 4219, 75: 6409, 76: 8350, 77: 7771, 78: 8181,
    79: 9364, 80: 12846, 81: 14577, 82: 11813, 83: 14229, 84: 21258, 85: 21799, 86: 18172,
    87: 23895, 88: 32343, 89: 31065, 90: 31942, 91: 37794, 92: 45633, 93: 52072, 94: 46924,
    95: 54602, 96: 78606, 97: 77538, 98: 69055, 99: 90644, 100: 114893, 101: 113891, 102: 113139,
    103: 132908, 104: 164782, 105: 187349, 106: 171432, 107: 189781, 108: 263020, 109: 267378, 110: 248100,
    111: 309322, 112: 385150, 113: 391224, 114: 389427, 115: 458881, 116: 551870, 117: 601380, 118: 575444,
    119: 647147, 120: 867144, 121: 886962, 122: 816004,
}
