"""Published worked-example tables, transcribed verbatim.

Rows and columns are C1..C10 in order; entry [i][j] is the influence of
criterion i on criterion j.
"""

CODES = ["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10"]

DIRECT_RELATION = [
    [0.0, 2.6, 2.3, 2.6, 2.5, 2.7, 2.6, 2.8, 2.7, 2.8],
    [2.9, 0.0, 2.0, 2.1, 3.1, 3.0, 2.7, 3.3, 2.3, 2.2],
    [1.6, 2.3, 0.0, 2.6, 2.5, 2.4, 1.9, 1.9, 2.2, 2.1],
    [2.1, 2.7, 1.6, 0.0, 2.7, 1.9, 2.1, 3.0, 2.9, 2.0],
    [2.6, 1.9, 2.0, 2.8, 0.0, 3.0, 2.9, 2.6, 2.8, 2.2],
    [2.3, 2.5, 1.4, 2.2, 2.6, 0.0, 2.7, 2.5, 2.3, 2.0],
    [2.1, 3.6, 2.1, 2.7, 2.0, 2.9, 0.0, 2.3, 2.5, 1.9],
    [2.1, 2.5, 2.3, 1.9, 2.5, 2.7, 2.8, 0.0, 2.5, 1.8],
    [2.5, 1.3, 1.9, 2.6, 2.8, 2.5, 2.5, 2.3, 0.0, 2.8],
    [1.8, 1.9, 3.2, 2.8, 2.2, 2.2, 2.8, 3.4, 3.0, 0.0],
]

NORMALIZED = [
    [0.0, 0.1079, 0.0954, 0.1079, 0.1037, 0.112, 0.1079, 0.1162, 0.112, 0.1162],
    [0.1203, 0.0, 0.083, 0.0871, 0.1286, 0.1245, 0.112, 0.1369, 0.0954, 0.0913],
    [0.0664, 0.0954, 0.0, 0.1079, 0.1037, 0.0996, 0.0788, 0.0788, 0.0913, 0.0871],
    [0.0871, 0.112, 0.0664, 0.0, 0.112, 0.0788, 0.0871, 0.1245, 0.1203, 0.083],
    [0.1079, 0.0788, 0.083, 0.1162, 0.0, 0.1245, 0.1203, 0.1079, 0.1162, 0.0913],
    [0.0954, 0.1037, 0.0581, 0.0913, 0.1079, 0.0, 0.112, 0.1037, 0.0954, 0.083],
    [0.0871, 0.1494, 0.0871, 0.112, 0.083, 0.1203, 0.0, 0.0954, 0.1037, 0.0788],
    [0.0871, 0.1037, 0.0954, 0.0788, 0.1037, 0.112, 0.1162, 0.0, 0.1037, 0.0747],
    [0.1037, 0.0539, 0.0788, 0.1079, 0.1162, 0.1037, 0.1037, 0.0954, 0.0, 0.1162],
    [0.0747, 0.0788, 0.1328, 0.1162, 0.0913, 0.0913, 0.1162, 0.1411, 0.1245, 0.0],
]

TOTAL_RELATION = [
    [0.8878, 1.0343, 0.916, 1.0695, 1.0936, 1.1181, 1.1042, 1.1496, 1.1117, 0.977],
    [0.9975, 0.939, 0.9062, 1.0534, 1.1153, 1.131, 1.1099, 1.1675, 1.0992, 0.9574],
    [0.8074, 0.872, 0.6939, 0.9126, 0.9325, 0.9431, 0.9169, 0.9496, 1.0925, 0.9374],
    [0.8815, 0.9441, 0.8093, 0.8755, 1.0023, 0.9909, 0.988, 1.0532, 1.0186, 0.8634],
    [0.956, 0.9802, 0.9917, 1.0444, 0.9663, 1.0946, 1.081, 1.1074, 1.0818, 0.9276],
    [0.8721, 0.9221, 0.7871, 0.9419, 0.98, 0.8992, 0.9905, 1.0172, 0.9797, 0.8472],
    [0.9182, 1.0153, 0.8595, 1.0159, 1.0201, 1.0668, 0.9485, 1.0727, 1.0457, 0.8954],
    [0.8814, 0.9396, 0.8334, 0.9499, 0.9954, 1.0192, 1.0121, 0.9415, 1.0047, 0.8566],
    [0.8984, 0.9023, 0.8251, 0.98, 1.0097, 1.0159, 1.007, 1.0348, 0.9176, 0.8959],
    [0.939, 0.9921, 0.9308, 1.0574, 1.0635, 1.0805, 1.0901, 1.1476, 1.1018, 0.8549],
]

ALPHA_CUT = [
    [0.0, 1.0343, 0.0, 1.0695, 1.0936, 1.1181, 1.1042, 1.1496, 1.1117, 0.977],
    [0.9975, 0.0, 0.0, 1.0534, 1.1153, 1.131, 1.1099, 1.1675, 1.0992, 0.0],
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.1614, 0.1259, 0.0],
    [0.0, 0.0, 0.0, 0.0, 1.0023, 0.9909, 0.988, 1.0532, 1.0186, 0.0],
    [0.0, 0.9802, 0.1147, 1.0444, 0.0, 1.0946, 1.081, 1.1074, 1.0818, 0.0],
    [0.0, 0.0, 0.0, 0.0, 0.98, 0.0, 0.9905, 1.0172, 0.9797, 0.0],
    [0.0, 1.0153, 0.0, 1.0159, 1.0201, 1.0668, 0.0, 1.0727, 1.0457, 0.0],
    [0.0, 0.0, 0.0, 0.0, 0.9954, 1.0192, 1.0121, 0.0, 1.0047, 0.0],
    [0.0, 0.0, 0.0, 0.98, 1.0097, 1.0159, 1.007, 1.0348, 0.0, 0.0],
    [0.0, 0.9921, 0.0, 1.0574, 1.0635, 1.0805, 1.0901, 1.1476, 1.1018, 0.0],
]

ALPHA = 0.9752

# code: (D, R, D+R, D-R, group)
PROMINENCE = {
    "C1": (10.462, 9.0393, 19.50125, 1.4226752, "cause"),
    "C2": (10.477, 9.5411, 20.01761, 0.9353911, "cause"),
    "C3": (8.7706, 8.4383, 17.20887, 0.3322851, "cause"),
    "C4": (9.4267, 9.9004, 19.32717, -0.473676, "effect"),
    "C5": (10.116, 10.179, 20.29484, -0.062452, "effect"),
    "C6": (9.2369, 10.359, 19.59631, -1.122412, "effect"),
    "C7": (9.8581, 10.248, 20.1064, -0.390191, "effect"),
    "C8": (9.434, 10.641, 20.07508, -1.207166, "effect"),
    "C9": (9.4868, 10.292, 19.77877, -0.805249, "effect"),
    "C10": (10.258, 8.887, 19.14481, 1.3707933, "cause"),
}

# Published expert score vectors for three cells: (from, to) -> scores, mean
WORKED_CELLS = {
    ("C2", "C1"): ([4, 1, 0, 4, 1, 4, 3, 4, 4, 4], 2.9),
    ("C7", "C2"): ([4, 4, 4, 4, 1, 3, 4, 4, 4, 4], 3.6),
    ("C9", "C2"): ([3, 0, 0, 3, 3, 3, 1, 0, 0, 0], 1.3),
}

# Printed total-relation cells that contradict the published D/R sums.
TOTAL_RELATION_ERRATA = {("C3", "C9"), ("C3", "C10"), ("C5", "C3")}

# Printed alpha-cut cells that are neither the total-relation value nor 0.
ALPHA_CUT_ERRATA = {("C3", "C8"), ("C3", "C9"), ("C5", "C3")}
