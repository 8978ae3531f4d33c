"""NYC subway fixture definition.

Station rows come from data/sources/mta_stations.json (MIT-licensed port of
the MTA Stations.csv). Route patterns are daytime weekday stopping patterns
written as GTFS stop ids. Staten Island Railway is not part of the subway
network and is dropped. ADA status is hand-assembled.
"""


def _seq(prefix, lo, hi, skip=()):
    return [f"{prefix}{i:02d}" for i in range(lo, hi + 1) if i not in skip]


_CPW_LOCAL = ["A14", "A15", "A16", "A17", "A18", "A19", "A20", "A21", "A22", "A24"]
_IRT_LEX_EXP = ["621", "626", "629", "631", "635", "640", "418", "419", "420", "423"]

ROUTES = {
    "1": {"main": ["101", "103", "104", "106", "107", "108", "109", "110", "111", "112", "113", "114", "115",
                   "116", "117", "118", "119", "120", "121", "122", "123", "124", "125", "126", "127", "128",
                   "129", "130", "131", "132", "133", "134", "135", "136", "137", "138", "139", "142"]},
    "2": {"main": ["201", "204", "205", "206", "207", "208", "209", "210", "211", "212", "213", "214", "215",
                   "216", "217", "218", "219", "220", "221", "222", "224", "225", "226", "227", "120", "123",
                   "127", "128", "132", "137", "228", "229", "230", "231", "232", "233", "234", "235", "236",
                   "237", "238", "239", "241", "242", "243", "244", "245", "246", "247"]},
    "3": {"main": ["301", "302", "224", "225", "226", "227", "120", "123", "127", "128", "132", "137", "228",
                   "229", "230", "231", "232", "233", "234", "235", "236", "237", "238", "239", "248", "249",
                   "250", "251", "252", "253", "254", "255", "256", "257"]},
    "4": {"main": ["401", "402", "405", "406", "407", "408", "409", "410", "411", "412", "413", "414", "415",
                   "416"] + _IRT_LEX_EXP + ["234", "235", "239", "250"]},
    "5": {"main": ["501", "502", "503", "504", "505", "213", "214", "215", "216", "217", "218", "219", "220",
                   "221", "222", "416"] + _IRT_LEX_EXP + ["234", "235", "239", "241", "242", "243", "244",
                                                         "245", "246", "247"]},
    "6": {"main": ["601", "602", "603", "604", "606", "607", "608", "609", "610", "611", "612", "613", "614",
                   "615", "616", "617", "618", "619", "621", "622", "623", "624", "625", "626", "627", "628",
                   "629", "630", "631", "632", "633", "634", "635", "636", "637", "638", "639", "640"]},
    "7": {"main": ["701", "702", "705", "706", "707", "708", "709", "710", "711", "712", "713", "714", "715",
                   "716", "718", "719", "720", "721", "723", "724", "725", "726"]},
    "A": {
        "inwood_lefferts": ["A02", "A03", "A05", "A06", "A07", "A09", "A12", "A15", "A24", "A27", "A28", "A31",
                            "A32", "A34", "A36", "A38", "A40", "A41", "A42", "A46", "A48", "A51", "A55", "A57",
                            "A59", "A60", "A61", "A63", "A64", "A65"],
        "inwood_far_rockaway": ["A02", "A03", "A05", "A06", "A07", "A09", "A12", "A15", "A24", "A27", "A28",
                                "A31", "A32", "A34", "A36", "A38", "A40", "A41", "A42", "A46", "A48", "A51",
                                "A55", "A57", "A59", "A60", "A61", "H01", "H02", "H03", "H04", "H06", "H07",
                                "H08", "H09", "H10", "H11"],
    },
    "C": {"main": ["A09", "A10", "A11", "A12"] + _CPW_LOCAL + ["A25", "A27", "A28", "A30", "A31", "A32",
                                                             "A33", "A34", "A36", "A38", "A40", "A41", "A42",
                                                             "A43", "A44", "A45", "A46", "A47", "A48", "A49",
                                                             "A50", "A51", "A52", "A53", "A54", "A55"]},
    "E": {"main": ["G05", "G06", "G07", "F05", "F06", "F07", "G08", "G14", "G21", "F09", "F11", "F12", "D14",
                   "A25", "A27", "A28", "A30", "A31", "A32", "A33", "A34", "E01"]},
    "F": {"main": ["F01", "F02", "F03", "F04", "F05", "F06", "F07", "G08", "G14", "B04", "B06", "B08", "B10",
                   "D15", "D16", "D17", "D18", "D19", "D20", "D21", "F14", "F15", "F16", "F18", "A41", "F20",
                   "F21", "F22", "F23", "F24", "F25", "F26", "F27", "F29", "F30", "F31", "F32", "F33", "F34",
                   "F35", "F36", "F38", "F39", "D42", "D43"]},
    "G": {"main": ["G22", "G24", "G26", "G28", "G29", "G30", "G31", "G32", "G33", "G34", "G35", "G36", "A42",
                   "F20", "F21", "F22", "F23", "F24", "F25", "F26", "F27"]},
    "J": {"main": ["G05", "G06", "J12", "J13", "J14", "J15", "J16", "J17", "J19", "J20", "J21", "J22", "J23",
                   "J24", "J27", "J28", "J29", "J30", "J31", "M11", "M12", "M13", "M14", "M16", "M18", "M19",
                   "M20", "M21", "M22", "M23"]},
    "Z": {"main": ["G05", "G06", "J12", "J14", "J15", "J17", "J20", "J21", "J23", "J27", "J28", "J30", "M11",
                   "M16", "M18", "M19", "M20", "M21", "M22", "M23"]},
    "L": {"main": ["L01", "L02", "L03", "L05", "L06", "L08", "L10", "L11", "L12", "L13", "L14", "L15", "L16",
                   "L17", "L19", "L20", "L21", "L22", "L24", "L25", "L26", "L27", "L28", "L29"]},
    "M": {"main": ["M01", "M04", "M05", "M06", "M08", "M09", "M10", "M11", "M12", "M13", "M14", "M16", "M18",
                   "D21", "D20", "D19", "D18", "D17", "D16", "D15", "F12", "F11", "F09", "G21", "G20", "G19",
                   "G18", "G16", "G15", "G14", "G13", "G12", "G11", "G10", "G09", "G08"]},
    "N": {"main": ["R01", "R03", "R04", "R05", "R06", "R08", "R09", "R11", "R13", "R14", "R15", "R16", "R17",
                   "R20", "Q01", "R31", "R36", "R41", "N02", "N03", "N04", "N05", "N06", "N07", "N08", "N09",
                   "N10", "D43"]},
    "Q": {"main": ["Q05", "Q04", "Q03", "B08", "R14", "R16", "R17", "R20", "Q01", "R30", "D24", "D25", "D26",
                   "D27", "D28", "D29", "D30", "D31", "D32", "D33", "D34", "D35", "D37", "D38", "D39", "D40",
                   "D41", "D42", "D43"]},
    "R": {"main": ["G08", "G09", "G10", "G11", "G12", "G13", "G14", "G15", "G16", "G18", "G19", "G20", "G21",
                   "R11", "R13", "R14", "R15", "R16", "R17", "R18", "R19", "R20", "R21", "R22", "R23", "R24",
                   "R25", "R26", "R27", "R28", "R29", "R30", "R31", "R32", "R33", "R34", "R35", "R36", "R39",
                   "R40", "R41", "R42", "R43", "R44", "R45"]},
    "W": {"main": ["R01", "R03", "R04", "R05", "R06", "R08", "R09", "R11", "R13", "R14", "R15", "R16", "R17",
                   "R18", "R19", "R20", "R21", "R22", "R23", "R24", "R25", "R26", "R27"]},
    "B": {"main": ["D03", "D04", "D05", "D06", "D07", "D08", "D09", "D10", "D11", "D12", "D13"] + _CPW_LOCAL
          + ["D14", "D15", "D16", "D17", "D20", "D21", "D22", "R30", "D24", "D25", "D26", "D28", "D31", "D35",
             "D39", "D40"]},
    "D": {"main": ["D01", "D03", "D04", "D05", "D06", "D07", "D08", "D09", "D10", "D11", "D12", "D13", "A15",
                   "A24", "D14", "D15", "D16", "D17", "D20", "D21", "D22", "R31", "R36", "B12", "B13", "B14",
                   "B15", "B16", "B17", "B18", "B19", "B20", "B21", "B22", "B23", "D43"]},
    "GS": {"main": ["902", "901"]},
    "FS": {"main": ["S01", "S03", "S04", "D26"]},
    "H": {"main": ["H04", "H12", "H13", "H14", "H15"]},
}

# Stop rows merged into another row's node: same complex, same name reversed.
NAME_ALIASES = {"Union Sq - 14 St": "14 St - Union Sq"}

# ADA-accessible stops (GTFS stop id). Value "*" marks every route at the stop
# as fully accessible; otherwise a space-separated route list.
ADA_FULL = {
    "104": "*", "109": "*", "112": "*", "120": "*", "123": "*", "124": "*", "125": "*", "127": "*",
    "128": "*", "132": "*", "137": "*", "138": "*", "142": "*",
    "208": "*", "213": "*", "222": "*", "301": "*", "229": "*", "232": "*", "235": "*", "247": "*",
    "250": "*",
    "412": "*", "414": "*", "415": "*",
    "601": "*", "604": "*", "608": "*", "613": "*",
    "621": "*", "628": "*", "629": "*", "630": "*", "631": "*", "635": "*", "636": "*", "637": "*",
    "639": "*", "640": "*", "418": "*", "420": "*", "423": "*",
    "701": "*", "702": "*", "707": "*", "709": "*", "710": "*", "712": "*", "718": "*", "719": "*",
    "723": "*", "724": "*", "725": "*", "726": "*",
    "A07": "*", "A09": "*", "A15": "*", "A21": "*", "A24": "*", "A27": "*", "A28": "*", "A31": "*",
    "A32": "*", "A34": "*", "A36": "*", "E01": "*", "A38": "*", "A41": "*", "A45": "*", "A48": "*",
    "A55": "*", "H03": "*", "H11": "*", "H15": "*",
    "D11": "*", "D15": "*", "D16": "*", "D17": "*", "D19": "*", "D20": "*", "D21": "*", "D22": "*",
    "F15": "*", "F27": "*", "D42": "*", "D43": "*",
    "B04": "*", "B06": "*", "B08": "*",
    "F01": "*", "F06": "*", "G08": "*", "G14": "*", "G21": "*", "F09": "*", "F11": "*",
    "G05": "*", "G06": "*", "G07": "*", "G22": "*",
    "M11": "*", "M16": "*", "M20": "*", "M22": "*", "M01": "*", "M08": "*",
    "L01": "*", "L02": "*", "L03": "*", "L06": "*", "L08": "*", "L17": "*", "L29": "*",
    "R03": "*", "R09": "*", "R11": "*", "R14": "*", "R15": "*", "R16": "*", "R17": "*", "R20": "*",
    "Q01": "*", "R23": "*", "R25": "*", "R27": "*", "R28": "*", "R29": "*", "R30": "*", "R31": "*",
    "R44": "*", "R45": "*",
    "D24": "*", "D26": "*", "D28": "*", "D31": "*", "D32": "*", "D35": "*", "D40": "*",
    "B16": "*", "N04": "*", "B21": "*", "N02": "*",
    "Q03": "*", "Q04": "*", "Q05": "*",
    "S01": "*", "S04": "*", "902": "*", "901": "*",
}

ADA_ONE_WAY = {
    "A25": "*",  # downtown platform only
    "L20": "*",  # Manhattan-bound platform only
}

BOROUGH_CODES = {"M": "Manhattan", "Bk": "Brooklyn", "Q": "Queens", "Bx": "Bronx"}

# borough, median household income ($k), daytime total, daytime workers,
# average weekday ridership, average weekend ridership.
# Manhattan income is the published figure; the rest are approximate.
BOROUGH_TABLE = [
    ("Manhattan", 101.078, 3940000, 2780000, 2310000, 1520000),
    ("Brooklyn", 74.692, 2340000, 880000, 650000, 430000),
    ("Queens", 80.557, 2150000, 780000, 520000, 350000),
    ("Bronx", 46.838, 1300000, 430000, 300000, 200000),
    ("Staten Island", 98.290, 440000, 130000, None, None),
]

REFERENCE = {
    "stations": 472,
    "accessible_stations": 130,
    "full": {"nodes": 436, "edges": 527, "diameter": 41, "gamma": 2.2553},
    "accessible": {"nodes": 125, "edges": 162, "diameter": 15, "gamma": 2.2271},
}

# Published top-10 tables: (label, score, accessible flag in full-network tables).
PUBLISHED_TOP10 = {
    "accessible": {
        "betweenness": [("Grand Central - 42nd St", 0.285), ("Times Sq - 42nd St", 0.276),
                        ("Herald Sq - 34th St", 0.256), ("125th St (4)", 0.232), ("Fulton St", 0.221),
                        ("Union Sq - 14th St", 0.195), ("Atlantic Av - Barclay's Center", 0.185),
                        ("Jay St - MetroTech", 0.180), ("Brooklyn Bridge - City Hall", 0.161),
                        ("Marcy Ave", 0.136)],
        "closeness": [("Times Sq - 42nd St", 0.247), ("Herald Sq - 34th St", 0.246),
                      ("Grand Central - 42nd St", 0.239), ("Fulton St", 0.238),
                      ("Brooklyn Bridge - City Hall", 0.232), ("W 4th St - Washington Sq", 0.232),
                      ("Union Sq - 14th St", 0.230), ("Broadway - Lafayette St", 0.221),
                      ("47th-50th Sts - Rockefeller Ctr", 0.220), ("Jay St - MetroTech", 0.217)],
    },
    "full": {
        "betweenness": [("Atlantic Ave - Barclay's Center", 0.359, True), ("Times Sq - 42nd St", 0.325, True),
                        ("Grand Central - 42nd St", 0.248, True), ("59th St", 0.224, True),
                        ("14th St - Union Sq", 0.201, True), ("Broadway Junction", 0.195, False),
                        ("Hoyt Schermerhorn", 0.175, False), ("59th St - Columbus Circle", 0.165, True),
                        ("Canal St (6)", 0.164, True), ("Nostrand Ave (A)", 0.160, False)],
        "closeness": [("59th St", 0.132, True), ("Grand Central - 42nd St", 0.131, True),
                      ("Atlantic Ave - Barclay's Center", 0.131, True), ("14th St - Union Sq", 0.130, True),
                      ("36th St (N)", 0.129, False), ("Times Sq - 42nd St", 0.128, True),
                      ("Canal St (6)", 0.128, True), ("Herald Sq - 34th St", 0.127, True),
                      ("DeKalb Ave", 0.125, True), ("Grand St", 0.123, True)],
    },
}

# Table labels mapped to fixture ids. MTA stop names differ from the table labels.
LABEL_IDS = {
    "Grand Central - 42nd St": "grand_central_42_st",
    "Times Sq - 42nd St": "times_sq_42_st",
    "Herald Sq - 34th St": "34_st_herald_sq",
    "125th St (4)": "125_st_4",
    "Fulton St": "fulton_st_2",
    "Union Sq - 14th St": "14_st_union_sq",
    "14th St - Union Sq": "14_st_union_sq",
    "Atlantic Av - Barclay's Center": "atlantic_av_barclays_ctr",
    "Atlantic Ave - Barclay's Center": "atlantic_av_barclays_ctr",
    "Marcy Ave": "marcy_av",
    "W 4th St - Washington Sq": "w_4_st",
    "Broadway - Lafayette St": "broadway_lafayette_st",
    "47th-50th Sts - Rockefeller Ctr": "47_50_sts_rockefeller_ctr",
    "59th St": "59_st_4",
    "59th St - Columbus Circle": "59_st_columbus_circle",
    "Hoyt Schermerhorn": "hoyt_schermerhorn_sts",
    "Broadway Junction": "broadway_jct",
    "Nostrand Ave (A)": "nostrand_av_a",
    "36th St (N)": "36_st_d",
    "DeKalb Ave": "dekalb_av_b",
    "Grand St": "grand_st_b",
}

SOCIO_REFERENCE = {"borough": "Manhattan", "median_income_k": 101.078}
