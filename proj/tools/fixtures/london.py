"""London fixture definition: Tube + Elizabeth line + DLR.

Tube station names and adjacency come from data/sources/tube_map_network.json
(MIT-licensed snapshot of TfL topology). Service patterns below are written as
terminal-to-terminal runs so that the accessible collapse crosses junctions the
way trains do. Elizabeth line, DLR, step-free status, boroughs and fare zones
are hand-assembled.
"""

BRANCHES = {
    "bakerloo": {
        "main": ["Harrow & Wealdstone", "Kenton", "South Kenton", "North Wembley", "Wembley Central",
                 "Stonebridge Park", "Harlesden", "Willesden Junction", "Kensal Green", "Queen's Park",
                 "Kilburn Park", "Maida Vale", "Warwick Avenue", "Paddington", "Edgware Road (Bakerloo)",
                 "Marylebone", "Baker Street", "Regent's Park", "Oxford Circus", "Piccadilly Circus",
                 "Charing Cross", "Embankment", "Waterloo", "Lambeth North", "Elephant & Castle"],
    },
    "central": {
        "west_ruislip_epping": [
            "West Ruislip", "Ruislip Gardens", "South Ruislip", "Northolt", "Greenford", "Perivale",
            "Hanger Lane", "North Acton", "East Acton", "White City", "Shepherd's Bush (Central)",
            "Holland Park", "Notting Hill Gate", "Queensway", "Lancaster Gate", "Marble Arch",
            "Bond Street", "Oxford Circus", "Tottenham Court Road", "Holborn", "Chancery Lane",
            "St. Paul's", "Bank", "Liverpool Street", "Bethnal Green", "Mile End", "Stratford",
            "Leyton", "Leytonstone", "Snaresbrook", "South Woodford", "Woodford", "Buckhurst Hill",
            "Loughton", "Debden", "Theydon Bois", "Epping"],
        "ealing_hainault": [
            "Ealing Broadway", "West Acton", "North Acton", "East Acton", "White City",
            "Shepherd's Bush (Central)", "Holland Park", "Notting Hill Gate", "Queensway",
            "Lancaster Gate", "Marble Arch", "Bond Street", "Oxford Circus", "Tottenham Court Road",
            "Holborn", "Chancery Lane", "St. Paul's", "Bank", "Liverpool Street", "Bethnal Green",
            "Mile End", "Stratford", "Leyton", "Leytonstone", "Wanstead", "Redbridge", "Gants Hill",
            "Newbury Park", "Barkingside", "Fairlop", "Hainault"],
        "hainault_woodford": ["Hainault", "Grange Hill", "Chigwell", "Roding Valley", "Woodford"],
    },
    "circle": {
        "hammersmith_paddington": [
            "Hammersmith (H&C Line)", "Goldhawk Road", "Shepherd's Bush Market", "Wood Lane",
            "Latimer Road", "Ladbroke Grove", "Westbourne Park", "Royal Oak",
            "Paddington (H&C Line)-Underground", "Edgware Road (Circle Line)", "Baker Street",
            "Great Portland Street", "Euston Square", "King's Cross St. Pancras", "Farringdon",
            "Barbican", "Moorgate", "Liverpool Street", "Aldgate", "Tower Hill", "Monument",
            "Cannon Street", "Mansion House", "Blackfriars", "Temple", "Embankment", "Westminster",
            "St. James's Park", "Victoria", "Sloane Square", "South Kensington", "Gloucester Road",
            "High Street Kensington", "Notting Hill Gate", "Bayswater", "Paddington"],
        # second pass over the loop closure at Edgware Road
        "loop_closure": [
            "South Kensington", "Gloucester Road", "High Street Kensington", "Notting Hill Gate",
            "Bayswater", "Paddington", "Edgware Road (Circle Line)", "Baker Street",
            "Great Portland Street", "Euston Square", "King's Cross St. Pancras"],
    },
    "district": {
        "upminster_richmond": [
            "Upminster", "Upminster Bridge", "Hornchurch", "Elm Park", "Dagenham East",
            "Dagenham Heathway", "Becontree", "Upney", "Barking", "East Ham", "Upton Park",
            "Plaistow", "West Ham", "Bromley-by-Bow", "Bow Road", "Mile End", "Stepney Green",
            "Whitechapel", "Aldgate East", "Tower Hill", "Monument", "Cannon Street",
            "Mansion House", "Blackfriars", "Temple", "Embankment", "Westminster",
            "St. James's Park", "Victoria", "Sloane Square", "South Kensington", "Gloucester Road",
            "Earl's Court", "West Kensington", "Barons Court", "Hammersmith (Dist&Picc Line)",
            "Ravenscourt Park", "Stamford Brook", "Turnham Green", "Gunnersbury", "Kew Gardens",
            "Richmond"],
        "upminster_ealing": [
            "Upminster", "Upminster Bridge", "Hornchurch", "Elm Park", "Dagenham East",
            "Dagenham Heathway", "Becontree", "Upney", "Barking", "East Ham", "Upton Park",
            "Plaistow", "West Ham", "Bromley-by-Bow", "Bow Road", "Mile End", "Stepney Green",
            "Whitechapel", "Aldgate East", "Tower Hill", "Monument", "Cannon Street",
            "Mansion House", "Blackfriars", "Temple", "Embankment", "Westminster",
            "St. James's Park", "Victoria", "Sloane Square", "South Kensington", "Gloucester Road",
            "Earl's Court", "West Kensington", "Barons Court", "Hammersmith (Dist&Picc Line)",
            "Ravenscourt Park", "Stamford Brook", "Turnham Green", "Chiswick Park", "Acton Town",
            "Ealing Common", "Ealing Broadway"],
        "tower_hill_wimbledon": [
            "Tower Hill", "Monument", "Cannon Street", "Mansion House", "Blackfriars", "Temple",
            "Embankment", "Westminster", "St. James's Park", "Victoria", "Sloane Square",
            "South Kensington", "Gloucester Road", "Earl's Court", "West Brompton",
            "Fulham Broadway", "Parsons Green", "Putney Bridge", "East Putney", "Southfields",
            "Wimbledon Park", "Wimbledon"],
        "edgware_road_wimbledon": [
            "Edgware Road (Circle Line)", "Paddington", "Bayswater", "Notting Hill Gate",
            "High Street Kensington", "Earl's Court", "West Brompton", "Fulham Broadway",
            "Parsons Green", "Putney Bridge", "East Putney", "Southfields", "Wimbledon Park",
            "Wimbledon"],
        "olympia_edgware_road": [
            "Kensington (Olympia)", "Earl's Court", "High Street Kensington", "Notting Hill Gate",
            "Bayswater", "Paddington", "Edgware Road (Circle Line)"],
    },
    "hammersmith-city": {
        "main": [
            "Hammersmith (H&C Line)", "Goldhawk Road", "Shepherd's Bush Market", "Wood Lane",
            "Latimer Road", "Ladbroke Grove", "Westbourne Park", "Royal Oak",
            "Paddington (H&C Line)-Underground", "Edgware Road (Circle Line)", "Baker Street",
            "Great Portland Street", "Euston Square", "King's Cross St. Pancras", "Farringdon",
            "Barbican", "Moorgate", "Liverpool Street", "Aldgate East", "Whitechapel",
            "Stepney Green", "Mile End", "Bow Road", "Bromley-by-Bow", "West Ham", "Plaistow",
            "Upton Park", "East Ham", "Barking"],
    },
    "jubilee": {
        "main": [
            "Stanmore", "Canons Park", "Queensbury", "Kingsbury", "Wembley Park", "Neasden",
            "Dollis Hill", "Willesden Green", "Kilburn", "West Hampstead", "Finchley Road",
            "Swiss Cottage", "St. John's Wood", "Baker Street", "Bond Street", "Green Park",
            "Westminster", "Waterloo", "Southwark", "London Bridge", "Bermondsey", "Canada Water",
            "Canary Wharf", "North Greenwich", "Canning Town", "West Ham", "Stratford"],
    },
    "metropolitan": {},
    "northern": {},
    "piccadilly": {},
    "victoria": {
        "main": [
            "Walthamstow Central", "Blackhorse Road", "Tottenham Hale", "Seven Sisters",
            "Finsbury Park", "Highbury & Islington", "King's Cross St. Pancras", "Euston",
            "Warren Street", "Oxford Circus", "Green Park", "Victoria", "Pimlico", "Vauxhall",
            "Stockwell", "Brixton"],
    },
    "waterloo-city": {"main": ["Waterloo", "Bank"]},
}

_MET_TRUNK = ["Aldgate", "Liverpool Street", "Moorgate", "Barbican", "Farringdon",
              "King's Cross St. Pancras", "Euston Square", "Great Portland Street", "Baker Street",
              "Finchley Road", "Wembley Park", "Preston Road", "Northwick Park", "Harrow-on-the-Hill"]
_MET_NORTH = ["North Harrow", "Pinner", "Northwood Hills", "Northwood", "Moor Park"]
BRANCHES["metropolitan"] = {
    "aldgate_amersham": _MET_TRUNK + _MET_NORTH + ["Rickmansworth", "Chorleywood", "Chalfont & Latimer", "Amersham"],
    "aldgate_chesham": _MET_TRUNK + _MET_NORTH + ["Rickmansworth", "Chorleywood", "Chalfont & Latimer", "Chesham"],
    "aldgate_watford": _MET_TRUNK + _MET_NORTH + ["Croxley", "Watford"],
    "aldgate_uxbridge": _MET_TRUNK + ["West Harrow", "Rayners Lane", "Eastcote", "Ruislip Manor",
                                      "Ruislip", "Ickenham", "Hillingdon", "Uxbridge"],
}

_NOR_EDGWARE = ["Edgware", "Burnt Oak", "Colindale", "Hendon Central", "Brent Cross", "Golders Green",
                "Hampstead", "Belsize Park", "Chalk Farm", "Camden Town"]
_NOR_BARNET = ["High Barnet", "Totteridge & Whetstone", "Woodside Park", "West Finchley",
               "Finchley Central", "East Finchley", "Highgate", "Archway", "Tufnell Park",
               "Kentish Town", "Camden Town"]
_NOR_MILL_HILL = ["Mill Hill East", "Finchley Central", "East Finchley", "Highgate", "Archway",
                  "Tufnell Park", "Kentish Town", "Camden Town"]
_NOR_BANK = ["Euston", "King's Cross St. Pancras", "Angel", "Old Street", "Moorgate", "Bank",
             "London Bridge", "Borough", "Elephant & Castle", "Kennington"]
_NOR_CX = ["Mornington Crescent", "Euston", "Warren Street", "Goodge Street", "Tottenham Court Road",
           "Leicester Square", "Charing Cross", "Embankment", "Waterloo", "Kennington"]
_NOR_MORDEN = ["Oval", "Stockwell", "Clapham North", "Clapham Common", "Clapham South", "Balham",
               "Tooting Bec", "Tooting Broadway", "Colliers Wood", "South Wimbledon", "Morden"]
_NOR_BATTERSEA = ["Nine Elms", "Battersea Power Station"]
BRANCHES["northern"] = {
    "edgware_bank_morden": _NOR_EDGWARE + _NOR_BANK + _NOR_MORDEN,
    "edgware_cx_morden": _NOR_EDGWARE + _NOR_CX + _NOR_MORDEN,
    "edgware_cx_battersea": _NOR_EDGWARE + _NOR_CX + _NOR_BATTERSEA,
    "barnet_bank_morden": _NOR_BARNET + _NOR_BANK + _NOR_MORDEN,
    "barnet_cx_morden": _NOR_BARNET + _NOR_CX + _NOR_MORDEN,
    "barnet_cx_battersea": _NOR_BARNET + _NOR_CX + _NOR_BATTERSEA,
    "mill_hill_east_cx": _NOR_MILL_HILL + _NOR_CX,
}

_PIC_TRUNK = ["Cockfosters", "Oakwood", "Southgate", "Arnos Grove", "Bounds Green", "Wood Green",
              "Turnpike Lane", "Manor House", "Finsbury Park", "Arsenal", "Holloway Road",
              "Caledonian Road", "King's Cross St. Pancras", "Russell Square", "Holborn",
              "Covent Garden", "Leicester Square", "Piccadilly Circus", "Green Park",
              "Hyde Park Corner", "Knightsbridge", "South Kensington", "Gloucester Road",
              "Earl's Court", "Barons Court", "Hammersmith (Dist&Picc Line)", "Turnham Green",
              "Acton Town"]
_PIC_HOUNSLOW = ["South Ealing", "Northfields", "Boston Manor", "Osterley", "Hounslow East",
                 "Hounslow Central", "Hounslow West", "Hatton Cross"]
BRANCHES["piccadilly"] = {
    "cockfosters_t5": _PIC_TRUNK + _PIC_HOUNSLOW + ["Heathrow Terminals 2 & 3", "Heathrow Terminal 5"],
    "cockfosters_t4_loop": _PIC_TRUNK + _PIC_HOUNSLOW + ["Heathrow Terminal 4", "Heathrow Terminals 2 & 3"],
    "cockfosters_uxbridge": _PIC_TRUNK + ["Ealing Common", "North Ealing", "Park Royal", "Alperton",
                                          "Sudbury Town", "Sudbury Hill", "South Harrow", "Rayners Lane",
                                          "Eastcote", "Ruislip Manor", "Ruislip", "Ickenham",
                                          "Hillingdon", "Uxbridge"],
}

_EL_WEST = ["Reading", "Twyford", "Maidenhead", "Taplow", "Burnham", "Slough", "Langley", "Iver",
            "West Drayton", "Hayes & Harlington"]
_EL_CORE = ["Southall", "Hanwell", "West Ealing", "Ealing Broadway", "Acton Main Line", "Paddington",
            "Bond Street", "Tottenham Court Road", "Farringdon", "Liverpool Street", "Whitechapel"]
_EL_EAST = ["Stratford", "Maryland", "Forest Gate", "Manor Park", "Ilford", "Seven Kings", "Goodmayes",
            "Chadwell Heath", "Romford", "Gidea Park", "Harold Wood", "Brentwood", "Shenfield"]
_EL_SE = ["Canary Wharf", "Custom House", "Woolwich", "Abbey Wood"]
BRANCHES["elizabeth"] = {
    "reading_shenfield": _EL_WEST + _EL_CORE + _EL_EAST,
    "reading_abbey_wood": _EL_WEST + _EL_CORE + _EL_SE,
    "heathrow_t5_abbey_wood": ["Heathrow Terminal 5", "Heathrow Terminals 2 & 3", "Hayes & Harlington"]
    + _EL_CORE + _EL_SE,
    "heathrow_t4_shenfield": ["Heathrow Terminal 4", "Heathrow Terminals 2 & 3", "Hayes & Harlington"]
    + _EL_CORE + _EL_EAST,
}

_DLR_LEWISHAM = ["West India Quay", "Canary Wharf", "Heron Quays", "South Quay", "Crossharbour", "Mudchute",
                 "Island Gardens", "Cutty Sark", "Greenwich", "Deptford Bridge", "Elverson Road", "Lewisham"]
_DLR_WOOLWICH = ["Canning Town", "West Silvertown", "Pontoon Dock", "London City Airport", "King George V",
                 "Woolwich Arsenal"]
_DLR_BECKTON = ["Canning Town", "Royal Victoria", "Custom House", "Prince Regent", "Royal Albert",
                "Beckton Park", "Cyprus", "Gallions Reach", "Beckton"]
BRANCHES["dlr"] = {
    "bank_lewisham": ["Bank", "Shadwell", "Limehouse", "Westferry"] + _DLR_LEWISHAM,
    "stratford_lewisham": ["Stratford", "Pudding Mill Lane", "Bow Church", "Devons Road", "Langdon Park",
                           "All Saints", "Poplar"] + _DLR_LEWISHAM,
    "tower_gateway_beckton": ["Tower Gateway", "Shadwell", "Limehouse", "Westferry", "Poplar", "Blackwall",
                              "East India"] + _DLR_BECKTON,
    "bank_woolwich": ["Bank", "Shadwell", "Limehouse", "Westferry", "Poplar", "Blackwall",
                      "East India"] + _DLR_WOOLWICH,
    "stratford_international_woolwich": ["Stratford International", "Stratford", "Stratford High Street",
                                         "Abbey Road", "West Ham", "Star Lane"] + _DLR_WOOLWICH,
    "stratford_international_beckton": ["Stratford International", "Stratford", "Stratford High Street",
                                        "Abbey Road", "West Ham", "Star Lane"] + _DLR_BECKTON,
}

# Step-free street-to-train Tube stations, with the lines on which access is
# full. "*" means every line serving the station.
TUBE_STEP_FREE = {
    "Acton Town": "*", "Alperton": "*", "Amersham": "*", "Bank": "northern waterloo-city", "Barking": "*",
    "Battersea Power Station": "*", "Bermondsey": "*", "Blackfriars": "*", "Blackhorse Road": "*",
    "Bond Street": "*", "Boston Manor": "*", "Brixton": "*", "Buckhurst Hill": "*",
    "Canada Water": "*", "Canary Wharf": "*", "Canning Town": "*", "Cannon Street": "*",
    "Chesham": "*", "Chorleywood": "*", "Cockfosters": "*", "Ealing Broadway": "*",
    "Earl's Court": "*", "Elm Park": "*", "Epping": "*", "Farringdon": "*", "Finsbury Park": "*",
    "Fulham Broadway": "*", "Gloucester Road": "district circle", "Green Park": "*", "Greenford": "*",
    "Hainault": "*", "Hammersmith (Dist&Picc Line)": "*", "Hammersmith (H&C Line)": "*",
    "Harrow & Wealdstone": "*", "Harrow-on-the-Hill": "*", "Hatton Cross": "*",
    "Heathrow Terminal 4": "*", "Heathrow Terminal 5": "*", "Heathrow Terminals 2 & 3": "*",
    "Hillingdon": "*", "Hornchurch": "*", "Hounslow East": "*", "Hounslow West": "*",
    "Kensington (Olympia)": "*", "King's Cross St. Pancras": "*", "Knightsbridge": "*",
    "Liverpool Street": "circle hammersmith-city metropolitan", "London Bridge": "*", "Mansion House": "*", "Moorgate": "*",
    "Morden": "*", "Newbury Park": "*", "Nine Elms": "*", "North Greenwich": "*",
    "Paddington": "bakerloo", "Paddington (H&C Line)-Underground": "*", "Queensbury": "*",
    "Richmond": "*", "Shepherd's Bush (Central)": "*", "South Kensington": "district circle",
    "Southwark": "*", "St. James's Park": "*", "Stanmore": "*", "Stratford": "*",
    "Sudbury Town": "*", "Tottenham Court Road": "*", "Tottenham Hale": "*", "Tower Hill": "*",
    "Upminster": "*", "Uxbridge": "*", "Vauxhall": "*", "Victoria": "*",
    "Walthamstow Central": "*", "Waterloo": "jubilee waterloo-city", "Wembley Central": "*",
    "Wembley Park": "*", "West Brompton": "*", "West Ham": "*", "West Hampstead": "*",
    "Westminster": "*", "White City": "*", "Whitechapel": "*", "Willesden Junction": "*",
    "Wimbledon": "*", "Wood Lane": "*", "Woodford": "*",
    "Highbury & Islington": "*", "Kingsbury": "*", "Leytonstone": "*",
    "Ruislip": "*", "Debden": "*", "Loughton": "*",
}

# Step-free in one direction only; excluded from the accessible network.
TUBE_ONE_WAY = {
    "Stamford Brook": "district",
    "Leyton": "central",
    "Baker Street": "jubilee",
}

BOROUGHS = {
    "City of London": ["Aldgate", "Bank", "Barbican", "Blackfriars", "Cannon Street", "Liverpool Street",
                       "Mansion House", "Monument", "Moorgate", "St. Paul's", "Tower Gateway"],
    "Westminster": ["Baker Street", "Bayswater", "Bond Street", "Charing Cross", "Covent Garden",
                    "Edgware Road (Bakerloo)", "Edgware Road (Circle Line)", "Embankment",
                    "Great Portland Street", "Green Park", "Hyde Park Corner", "Kilburn Park",
                    "Lancaster Gate", "Leicester Square", "Maida Vale", "Marble Arch", "Marylebone",
                    "Oxford Circus", "Paddington", "Paddington (H&C Line)-Underground",
                    "Piccadilly Circus", "Pimlico", "Queensway", "Regent's Park", "Royal Oak",
                    "St. James's Park", "St. John's Wood", "Temple", "Victoria", "Warwick Avenue",
                    "Westbourne Park", "Westminster"],
    "Camden": ["Belsize Park", "Camden Town", "Chalk Farm", "Chancery Lane", "Euston", "Euston Square",
               "Finchley Road", "Goodge Street", "Hampstead", "Holborn", "Kentish Town",
               "King's Cross St. Pancras", "Mornington Crescent", "Russell Square", "Swiss Cottage",
               "Tottenham Court Road", "Warren Street", "West Hampstead"],
    "Islington": ["Angel", "Archway", "Arsenal", "Caledonian Road", "Farringdon", "Finsbury Park",
                  "Highbury & Islington", "Holloway Road", "Old Street", "Tufnell Park"],
    "Hackney": ["Manor House"],
    "Tower Hamlets": ["Aldgate East", "All Saints", "Bethnal Green", "Blackwall", "Bow Church", "Bow Road",
                      "Bromley-by-Bow", "Canary Wharf", "Crossharbour", "Devons Road", "East India",
                      "Heron Quays", "Island Gardens", "Langdon Park", "Limehouse", "Mile End",
                      "Mudchute", "Poplar", "Shadwell", "South Quay", "Stepney Green", "Tower Hill",
                      "West India Quay", "Westferry", "Whitechapel"],
    "Newham": ["Abbey Road", "Beckton", "Beckton Park", "Canning Town", "Custom House", "Cyprus",
               "East Ham", "Forest Gate", "Gallions Reach", "King George V", "London City Airport",
               "Manor Park", "Maryland", "Plaistow", "Pontoon Dock", "Prince Regent", "Pudding Mill Lane",
               "Royal Albert", "Royal Victoria", "Star Lane", "Stratford", "Stratford High Street",
               "Stratford International", "Upton Park", "West Ham", "West Silvertown"],
    "Southwark": ["Bermondsey", "Borough", "Canada Water", "Elephant & Castle", "London Bridge", "Southwark"],
    "Lambeth": ["Brixton", "Clapham Common", "Clapham North", "Kennington", "Lambeth North", "Oval",
                "Stockwell", "Vauxhall", "Waterloo"],
    "Wandsworth": ["Balham", "Battersea Power Station", "Clapham South", "East Putney", "Nine Elms",
                   "Southfields", "Tooting Bec", "Tooting Broadway"],
    "Kensington and Chelsea": ["Earl's Court", "Gloucester Road", "High Street Kensington", "Holland Park",
                               "Knightsbridge", "Ladbroke Grove", "Latimer Road", "Notting Hill Gate",
                               "Sloane Square", "South Kensington"],
    "Hammersmith and Fulham": ["Barons Court", "East Acton", "Fulham Broadway", "Goldhawk Road",
                               "Hammersmith (Dist&Picc Line)", "Hammersmith (H&C Line)",
                               "Kensington (Olympia)", "Parsons Green", "Putney Bridge",
                               "Ravenscourt Park", "Shepherd's Bush (Central)", "Shepherd's Bush Market",
                               "Stamford Brook", "West Brompton", "West Kensington", "White City",
                               "Wood Lane"],
    "Brent": ["Alperton", "Dollis Hill", "Harlesden", "Kensal Green", "Kenton", "Kilburn", "Kingsbury",
              "Neasden", "North Wembley", "Northwick Park", "Preston Road", "Queen's Park",
              "South Kenton", "Stonebridge Park", "Sudbury Town", "Wembley Central", "Wembley Park",
              "Willesden Green", "Willesden Junction"],
    "Barnet": ["Brent Cross", "Burnt Oak", "Colindale", "East Finchley", "Edgware", "Finchley Central",
               "Golders Green", "Hendon Central", "High Barnet", "Mill Hill East",
               "Totteridge & Whetstone", "West Finchley", "Woodside Park"],
    "Haringey": ["Bounds Green", "Highgate", "Seven Sisters", "Tottenham Hale", "Turnpike Lane",
                 "Wood Green"],
    "Enfield": ["Arnos Grove", "Cockfosters", "Oakwood", "Southgate"],
    "Waltham Forest": ["Blackhorse Road", "Leyton", "Leytonstone", "Walthamstow Central"],
    "Redbridge": ["Barkingside", "Fairlop", "Gants Hill", "Goodmayes", "Hainault", "Ilford",
                  "Newbury Park", "Redbridge", "Seven Kings", "Snaresbrook", "South Woodford",
                  "Wanstead", "Woodford"],
    "Barking and Dagenham": ["Barking", "Becontree", "Chadwell Heath", "Dagenham East",
                             "Dagenham Heathway", "Upney"],
    "Havering": ["Elm Park", "Gidea Park", "Harold Wood", "Hornchurch", "Romford", "Upminster",
                 "Upminster Bridge"],
    "Greenwich": ["Abbey Wood", "Cutty Sark", "Greenwich", "North Greenwich", "Woolwich",
                  "Woolwich Arsenal"],
    "Lewisham": ["Deptford Bridge", "Elverson Road", "Lewisham"],
    "Merton": ["Colliers Wood", "Morden", "South Wimbledon", "Wimbledon", "Wimbledon Park"],
    "Richmond upon Thames": ["Kew Gardens", "Richmond"],
    "Hounslow": ["Boston Manor", "Chiswick Park", "Gunnersbury", "Hounslow Central", "Hounslow East",
                 "Hounslow West", "Osterley", "Turnham Green"],
    "Ealing": ["Acton Main Line", "Acton Town", "Ealing Broadway", "Ealing Common", "Greenford",
               "Hanger Lane", "Hanwell", "North Acton", "North Ealing", "Northfields", "Northolt",
               "Park Royal", "Perivale", "South Ealing", "Southall", "West Acton", "West Ealing"],
    "Harrow": ["Canons Park", "Harrow & Wealdstone", "Harrow-on-the-Hill", "North Harrow", "Pinner",
               "Queensbury", "Rayners Lane", "South Harrow", "Stanmore", "Sudbury Hill", "West Harrow"],
    "Hillingdon": ["Eastcote", "Hatton Cross", "Hayes & Harlington", "Heathrow Terminal 4",
                   "Heathrow Terminal 5", "Heathrow Terminals 2 & 3", "Hillingdon", "Ickenham",
                   "Northwood", "Northwood Hills", "Ruislip", "Ruislip Gardens", "Ruislip Manor",
                   "South Ruislip", "Uxbridge", "West Drayton", "West Ruislip"],
    "Outside London": ["Amersham", "Brentwood", "Buckhurst Hill", "Burnham", "Chalfont & Latimer",
                       "Chesham", "Chigwell", "Chorleywood", "Croxley", "Debden", "Epping", "Grange Hill",
                       "Iver", "Langley", "Loughton", "Maidenhead", "Moor Park", "Reading",
                       "Rickmansworth", "Roding Valley", "Shenfield", "Slough", "Taplow",
                       "Theydon Bois", "Twyford", "Watford"],
}

ZONES = {
    1: ["Aldgate", "Baker Street", "Bank", "Barbican", "Battersea Power Station", "Bayswater",
        "Blackfriars", "Bond Street", "Borough", "Cannon Street", "Chancery Lane", "Charing Cross",
        "Covent Garden", "Earl's Court", "Edgware Road (Bakerloo)", "Edgware Road (Circle Line)",
        "Elephant & Castle", "Embankment", "Euston", "Euston Square", "Farringdon", "Gloucester Road",
        "Goodge Street", "Great Portland Street", "Green Park", "High Street Kensington", "Holborn",
        "Hyde Park Corner", "Kennington", "King's Cross St. Pancras", "Knightsbridge", "Lambeth North",
        "Lancaster Gate", "Leicester Square", "Liverpool Street", "London Bridge", "Mansion House",
        "Marble Arch", "Marylebone", "Monument", "Moorgate", "Nine Elms", "Notting Hill Gate",
        "Old Street", "Oxford Circus", "Paddington", "Paddington (H&C Line)-Underground",
        "Piccadilly Circus", "Pimlico", "Queensway", "Regent's Park", "Russell Square", "Sloane Square",
        "South Kensington", "Southwark", "St. James's Park", "St. Paul's", "Temple",
        "Tottenham Court Road", "Tower Gateway", "Tower Hill", "Vauxhall", "Victoria", "Warren Street",
        "Waterloo", "Westminster", "Angel"],
    2: ["Aldgate East", "All Saints", "Arsenal", "Barons Court", "Belsize Park", "Bermondsey",
        "Bethnal Green", "Blackwall", "Bow Church", "Bow Road", "Brixton", "Bromley-by-Bow",
        "Caledonian Road", "Camden Town", "Canada Water", "Canary Wharf", "Canning Town", "Chalk Farm",
        "Clapham Common", "Clapham North", "Crossharbour", "Cutty Sark", "Deptford Bridge", "Devons Road",
        "East Acton", "East India", "Elverson Road", "Finchley Road", "Finsbury Park", "Fulham Broadway",
        "Goldhawk Road", "Greenwich", "Hammersmith (Dist&Picc Line)", "Hammersmith (H&C Line)",
        "Hampstead", "Heron Quays", "Highbury & Islington", "Holland Park", "Holloway Road",
        "Island Gardens", "Kensal Green", "Kensington (Olympia)", "Kentish Town", "Kilburn",
        "Kilburn Park", "Ladbroke Grove", "Langdon Park", "Latimer Road", "Lewisham", "Limehouse",
        "Maida Vale", "Manor House", "Mile End", "Mornington Crescent", "Mudchute", "North Acton",
        "North Greenwich", "Oval", "Parsons Green", "Poplar", "Pudding Mill Lane", "Putney Bridge",
        "Queen's Park", "Ravenscourt Park", "Royal Oak", "Shadwell", "Shepherd's Bush (Central)",
        "Shepherd's Bush Market", "South Quay", "St. John's Wood", "Stamford Brook", "Stepney Green",
        "Stockwell", "Stratford", "Stratford High Street", "Stratford International", "Swiss Cottage",
        "Tufnell Park", "Turnham Green", "Warwick Avenue", "West Brompton", "West Hampstead",
        "West India Quay", "West Kensington", "Westbourne Park", "Westferry", "White City",
        "Whitechapel", "Willesden Green", "Wood Lane", "Abbey Road", "Star Lane", "Archway",
        "Clapham South", "East Putney", "Highgate"],
    3: ["Acton Main Line", "Acton Town", "Balham", "Beckton", "Beckton Park", "Blackhorse Road",
        "Bounds Green", "Brent Cross", "Chiswick Park", "Colliers Wood", "Custom House", "Cyprus",
        "Dollis Hill", "Ealing Broadway", "Ealing Common", "East Finchley", "East Ham", "Forest Gate",
        "Gallions Reach", "Golders Green", "Gunnersbury", "Hanger Lane", "Harlesden", "Hendon Central",
        "King George V", "Leyton", "Leytonstone", "London City Airport", "Manor Park", "Maryland",
        "Neasden", "North Ealing", "Northfields", "Park Royal", "Plaistow", "Pontoon Dock",
        "Prince Regent", "Royal Albert", "Royal Victoria", "Seven Sisters", "South Ealing",
        "South Wimbledon", "Southfields", "Stonebridge Park", "Tooting Bec", "Tooting Broadway",
        "Tottenham Hale", "Turnpike Lane", "Upton Park", "Walthamstow Central", "West Acton",
        "West Ealing", "West Ham", "West Silvertown", "Willesden Junction", "Wimbledon",
        "Wimbledon Park", "Wood Green", "Kew Gardens"],
    4: ["Abbey Wood", "Alperton", "Arnos Grove", "Barking", "Barkingside", "Boston Manor", "Burnt Oak",
        "Colindale", "Fairlop", "Finchley Central", "Gants Hill", "Greenford", "Hainault", "Hanwell",
        "Hounslow Central", "Hounslow East", "Ilford", "Kenton", "Kingsbury", "Mill Hill East", "Morden",
        "Newbury Park", "North Wembley", "Northwick Park", "Osterley", "Perivale", "Preston Road",
        "Redbridge", "Richmond", "Seven Kings", "Snaresbrook", "South Woodford", "Southall",
        "Southgate", "Sudbury Hill", "Sudbury Town", "Upney", "Wanstead", "Wembley Central",
        "Wembley Park", "West Finchley", "Woodford", "Woodside Park", "Woolwich", "Woolwich Arsenal",
        "Chigwell", "Grange Hill", "Roding Valley"],
    5: ["Becontree", "Buckhurst Hill", "Canons Park", "Chadwell Heath", "Cockfosters", "Dagenham East",
        "Dagenham Heathway", "Eastcote", "Edgware", "Goodmayes", "Harrow & Wealdstone",
        "Harrow-on-the-Hill", "Hatton Cross", "High Barnet", "Hounslow West", "North Harrow", "Northolt",
        "Oakwood", "Pinner", "Queensbury", "Rayners Lane", "South Harrow", "South Kenton",
        "South Ruislip", "Stanmore", "Totteridge & Whetstone", "West Harrow"],
    6: ["Debden", "Elm Park", "Epping", "Gidea Park", "Harold Wood", "Hayes & Harlington",
        "Heathrow Terminal 4", "Heathrow Terminal 5", "Heathrow Terminals 2 & 3", "Hillingdon",
        "Hornchurch", "Ickenham", "Loughton", "Northwood", "Northwood Hills", "Romford", "Ruislip",
        "Ruislip Gardens", "Ruislip Manor", "Theydon Bois", "Upminster", "Upminster Bridge", "Uxbridge",
        "West Drayton", "West Ruislip"],
    7: ["Croxley", "Moor Park", "Rickmansworth", "Watford"],
    8: ["Chalfont & Latimer", "Chorleywood"],
    9: ["Amersham", "Brentwood", "Chesham"],
}

# Median annual resident earnings (GBP thousands) and daytime population.
# Newham's figures are the published ones; other boroughs are approximate.
BOROUGH_TABLE = [
    # borough, median_income_k, daytime_total, daytime_workers
    ("Barking and Dagenham", 27.6, 187000, 52000),
    ("Barnet", 33.9, 338000, 118000),
    ("Brent", 30.4, 306000, 120000),
    ("Camden", 42.6, 616000, 410000),
    ("City of London", 59.7, 553000, 541000),
    ("Ealing", 32.3, 307000, 118000),
    ("Enfield", 30.1, 281000, 92000),
    ("Greenwich", 32.5, 243000, 78000),
    ("Hackney", 34.9, 294000, 123000),
    ("Hammersmith and Fulham", 40.1, 283000, 156000),
    ("Haringey", 33.1, 240000, 65000),
    ("Harrow", 30.6, 218000, 71000),
    ("Havering", 31.4, 222000, 76000),
    ("Hillingdon", 31.9, 336000, 181000),
    ("Hounslow", 31.0, 283000, 139000),
    ("Islington", 40.4, 452000, 285000),
    ("Kensington and Chelsea", 44.3, 342000, 168000),
    ("Lambeth", 37.4, 358000, 177000),
    ("Lewisham", 33.6, 219000, 63000),
    ("Merton", 35.9, 192000, 71000),
    ("Newham", 28.9, 306102, 274935),
    ("Redbridge", 31.7, 223000, 63000),
    ("Richmond upon Thames", 41.2, 206000, 77000),
    ("Southwark", 37.2, 411000, 231000),
    ("Tower Hamlets", 38.5, 487000, 314000),
    ("Waltham Forest", 31.3, 200000, 55000),
    ("Wandsworth", 42.0, 300000, 117000),
    ("Westminster", 45.8, 1111000, 855000),
    ("Bexley", 30.9, 198000, 58000),
    ("Bromley", 35.2, 272000, 96000),
    ("Croydon", 32.2, 326000, 119000),
    ("Kingston upon Thames", 34.6, 164000, 69000),
    ("Sutton", 33.0, 169000, 55000),
]

LINE_ORDER = ["bakerloo", "central", "circle", "district", "hammersmith-city", "jubilee", "metropolitan",
              "northern", "piccadilly", "victoria", "waterloo-city", "elizabeth", "dlr"]

# Published reference values for this network.
REFERENCE = {
    "stations_tube": 272,
    "accessible_tube": 92,
    "full": {"nodes": 337, "edges": 397, "diameter": 34, "gamma": 2.2925},
    "accessible": {"nodes": 162, "edges": 195, "diameter": 28, "gamma": 2.3270},
}

# Published top-10 tables: (label, score, accessible flag in full-network tables).
PUBLISHED_TOP10 = {
    "accessible": {
        "betweenness": [("Stratford", 0.488), ("Tottenham Court Road", 0.415), ("Bond Street", 0.321),
                        ("Canary Wharf", 0.256), ("Whitechapel", 0.236), ("Ealing Broadway", 0.213),
                        ("King's Cross St. Pancras", 0.214), ("West Ham", 0.168), ("Paddington", 0.137),
                        ("West Ealing", 0.137)],
        "closeness": [("Bank", 0.191), ("Stratford", 0.188), ("Tottenham Court Road", 0.188),
                      ("Moorgate", 0.181), ("King's Cross St. Pancras", 0.179), ("Bond Street", 0.178),
                      ("Farringdon", 0.177), ("Liverpool Street", 0.177), ("Whitechapel", 0.176),
                      ("Westminster", 0.172)],
    },
    "full": {
        "betweenness": [("Bond Street", 0.450, True), ("Liverpool Street", 0.429, True),
                        ("Farringdon", 0.402, True), ("Whitechapel", 0.398, True),
                        ("Tottenham Court Road", 0.322, True), ("Paddington", 0.293, True),
                        ("Stratford", 0.291, True), ("Baker St", 0.289, False),
                        ("Ealing Broadway", 0.204, True), ("Finchley Rd", 0.199, False)],
        "closeness": [("Bond Street", 0.131, True), ("Farringdon", 0.130, True),
                      ("Tottenham Court Road", 0.130, True), ("Liverpool Street", 0.127, True),
                      ("Oxford Circus", 0.126, False), ("Paddington", 0.122, True),
                      ("Baker Street", 0.122, False), ("Green Park", 0.122, True),
                      ("King's Cross St. Pancras", 0.121, True), ("Whitechapel", 0.120, True)],
    },
}

# Table labels whose fixture id is not slug(label).
LABEL_IDS = {"Baker St": "baker_street", "Finchley Rd": "finchley_road"}

SOCIO_REFERENCE = {"borough": "Newham", "accessible": 24, "total": 28}
