#!/usr/bin/env python3
"""Regenerate data/london and data/nyc canonical CSV fixtures.

    python3 tools/fixtures/make_fixtures.py [--check]

--check regenerates into a temporary directory and fails if the committed
fixtures differ.
"""
import argparse
import csv
import filecmp
import json
import pathlib
import re
import sys
import tempfile

sys.path.insert(0, str(pathlib.Path(__file__).parent))
import london  # noqa: E402
import nyc  # noqa: E402

ROOT = pathlib.Path(__file__).resolve().parents[2]
SOURCES = ROOT / "data" / "sources"

# Places where the tube-map snapshot disagrees with the timetable.
SNAPSHOT_RENAMES = {"Battersea Power": "Battersea Power Station"}
SNAPSHOT_DROP = {  # Metropolitan trains do not call at Willesden Green
    ("metropolitan", frozenset(("Finchley Road", "Willesden Green"))),
    ("metropolitan", frozenset(("Wembley Park", "Willesden Green"))),
}
SNAPSHOT_ADD = {("metropolitan", frozenset(("Finchley Road", "Wembley Park")))}


def slug(text):
    text = text.lower().replace("&", " and ").replace("'", "")
    return re.sub(r"[^a-z0-9]+", "_", text).strip("_")


def write_csv(path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def write_boroughs(path, rows):
    out = []
    for r in rows:
        out.append(["" if v is None else (f"{v:g}" if isinstance(v, float) else v) for v in r])
        out[-1] += [""] * (6 - len(out[-1]))
    write_csv(path, ["borough", "median_income_k", "daytime_total", "daytime_workers",
                     "weekday_ridership", "weekend_ridership"], out)


def write_reference(out_dir, module, station_ids):
    top10 = {}
    for net, measures in module.PUBLISHED_TOP10.items():
        for measure, rows in measures.items():
            out = []
            for row in rows:
                label, score = row[0], row[1]
                sid = module.LABEL_IDS.get(label, slug(label))
                if sid not in station_ids:
                    raise SystemExit(f"table label {label!r} resolves to unknown id {sid}")
                entry = {"label": label, "id": sid, "score": score}
                if len(row) > 2:
                    entry["accessible"] = row[2]
                out.append(entry)
            top10.setdefault(net, {})[measure] = out
    ref = dict(module.REFERENCE)
    ref["reconstructed"] = True
    ref["top10"] = top10
    ref["socio"] = module.SOCIO_REFERENCE
    (out_dir / "reference.json").write_text(json.dumps(ref, indent=2, sort_keys=True) + "\n")


def build_london_tube(london_dir, out_dir):
    """Tube-only subset: drops Elizabeth line and DLR rows."""
    rail = {"elizabeth", "dlr"}
    with open(london_dir / "stations.csv", encoding="utf-8") as f:
        rows = list(csv.reader(f))
    out = [rows[0]]
    for r in rows[1:]:
        tube = [l for l in r[4].split("|") if l not in rail]
        if tube:
            out.append(r[:4] + ["|".join(tube)])
    write_csv(out_dir / "stations.csv", out[0], out[1:])
    for name in ("branches.csv", "accessibility.csv"):
        with open(london_dir / name, encoding="utf-8") as f:
            rows = list(csv.reader(f))
        col = 0 if name == "branches.csv" else 1
        write_csv(out_dir / name, rows[0], [r for r in rows[1:] if r[col] not in rail])


def build_london(out_dir):
    net = json.loads((SOURCES / "tube_map_network.json").read_text())
    by_id = {k: SNAPSHOT_RENAMES.get(v["name"], v["name"]) for k, v in net["stations"].items()}
    tube_names = set(by_id.values())
    tube_edges = set()
    for line in net["lines"]:
        for segs in line["branches"].values():
            for seg in segs:
                for a, b in zip(seg, seg[1:]):
                    tube_edges.add((line["id"], frozenset((by_id[a], by_id[b]))))
    tube_edges = (tube_edges - SNAPSHOT_DROP) | SNAPSHOT_ADD

    ours = set()
    lines_of = {}
    for line, branches in london.BRANCHES.items():
        for seq in branches.values():
            for name in seq:
                lines_of.setdefault(name, set()).add(line)
            for a, b in zip(seq, seq[1:]):
                if line not in ("elizabeth", "dlr"):
                    ours.add((line, frozenset((a, b))))
    missing = tube_edges - ours
    extra = ours - tube_edges
    if missing or extra:
        for line, e in sorted(missing, key=str):
            print("missing tube edge", line, sorted(e), file=sys.stderr)
        for line, e in sorted(extra, key=str):
            print("unknown tube edge", line, sorted(e), file=sys.stderr)
        raise SystemExit("tube adjacency does not match the source snapshot")
    unknown = {n for line, b in london.BRANCHES.items() if line not in ("elizabeth", "dlr")
               for seq in b.values() for n in seq} - tube_names
    if unknown:
        raise SystemExit(f"unknown tube stations: {sorted(unknown)}")

    borough_of = {}
    for b, names in london.BOROUGHS.items():
        for n in names:
            if n in borough_of:
                raise SystemExit(f"{n} assigned to two boroughs")
            borough_of[n] = b
    zone_of = {}
    for z, names in london.ZONES.items():
        for n in names:
            if n in zone_of:
                raise SystemExit(f"{n} has two zones")
            zone_of[n] = z
    no_borough = sorted(set(lines_of) - set(borough_of))
    if no_borough:
        raise SystemExit(f"stations without borough: {no_borough}")
    stale = sorted((set(borough_of) | set(zone_of)) - set(lines_of))
    if stale:
        raise SystemExit(f"borough/zone entries for unknown stations: {stale}")

    ids = {}
    for name in lines_of:
        sid = slug(name)
        if sid in ids.values():
            raise SystemExit(f"id collision {sid}")
        ids[name] = sid

    line_rank = {l: i for i, l in enumerate(london.LINE_ORDER)}
    rows = []
    for name in sorted(lines_of, key=lambda n: ids[n]):
        ls = sorted(lines_of[name], key=line_rank.get)
        rows.append([ids[name], name, borough_of[name], zone_of.get(name, ""), "|".join(ls)])
    write_csv(out_dir / "stations.csv", ["id", "name", "borough", "region", "lines"], rows)

    rows = []
    for line in london.LINE_ORDER:
        for bid, seq in london.BRANCHES[line].items():
            for i, name in enumerate(seq, 1):
                rows.append([line, bid, i, ids[name]])
    write_csv(out_dir / "branches.csv", ["line_id", "branch_id", "seq", "station_id"], rows)

    acc = {}
    for name, spec in london.TUBE_STEP_FREE.items():
        if name not in tube_names:
            raise SystemExit(f"step-free entry for unknown station {name}")
        tube_lines = sorted(lines_of[name] - {"elizabeth", "dlr"})
        chosen = tube_lines if spec == "*" else spec.split()
        for l in chosen:
            if l not in lines_of[name]:
                raise SystemExit(f"{name} is not served by {l}")
            acc[(ids[name], l)] = "full"
    for name, l in london.TUBE_ONE_WAY.items():
        key = (ids[name], l)
        if key in acc:
            raise SystemExit(f"{name} listed both full and one_way on {l}")
        acc[key] = "one_way"
    for line in ("elizabeth", "dlr"):
        for seq in london.BRANCHES[line].values():
            for name in seq:
                acc[(ids[name], line)] = "full"
    write_csv(out_dir / "accessibility.csv", ["station_id", "line_id", "mode"],
              [[s, l, m] for (s, l), m in sorted(acc.items())])

    write_boroughs(out_dir / "boroughs.csv", london.BOROUGH_TABLE)
    write_reference(out_dir, london, set(ids.values()))


def build_nyc(out_dir):
    rows = [r for r in json.loads((SOURCES / "mta_stations.json").read_text()) if r["Borough"] != "SI"]
    by_stop = {r["GTFS Stop ID"]: r for r in rows}

    def canonical(r):
        name = nyc.NAME_ALIASES.get(r["Stop Name"], r["Stop Name"])
        return (r["Complex ID"], name)

    routes_at = {}
    for route, branches in nyc.ROUTES.items():
        for seq in branches.values():
            for stop in seq:
                if stop not in by_stop:
                    raise SystemExit(f"route {route}: unknown stop {stop}")
                routes_at.setdefault(stop, set()).add(route)
    unused = sorted(set(by_stop) - set(routes_at))
    if unused:
        raise SystemExit(f"stops served by no route: {unused}")

    def route_key(r):
        return (0, int(r)) if r.isdigit() else (1, r)

    groups = {}
    for stop, r in by_stop.items():
        groups.setdefault(canonical(r), []).append(stop)
    by_name = {}
    for key in groups:
        by_name.setdefault(key[1], []).append(key)

    def routes_of(key):
        return sorted({x for s in groups[key] for x in routes_at[s]}, key=route_key)

    node_of_stop = {}
    nodes = {}
    for key, stops in groups.items():
        name = key[1]
        routes = routes_of(key)
        display = name
        if len(by_name[name]) > 1:
            # Label with the lowest route no other same-named complex has.
            others = {x for k in by_name[name] if k != key for x in routes_of(k)}
            tag = next((r for r in routes if r not in others), None)
            if tag is None:
                raise SystemExit(f"cannot disambiguate {name}")
            display = f"{name} ({tag})"
        sid = slug(display)
        if sid in nodes:
            raise SystemExit(f"id collision {sid}")
        boroughs = {nyc.BOROUGH_CODES[by_stop[s]["Borough"]] for s in stops}
        nodes[sid] = (display, sorted(boroughs)[0], routes)
        for s in stops:
            node_of_stop[s] = sid

    write_csv(out_dir / "stations.csv", ["id", "name", "borough", "region", "lines"],
              [[sid, d, b, "", "|".join(r)] for sid, (d, b, r) in sorted(nodes.items())])

    out = []
    for route in sorted(nyc.ROUTES, key=route_key):
        for bid, seq in nyc.ROUTES[route].items():
            for i, stop in enumerate(seq, 1):
                out.append([route, bid, i, node_of_stop[stop]])
    write_csv(out_dir / "branches.csv", ["line_id", "branch_id", "seq", "station_id"], out)

    acc = {}
    for table, mode in ((nyc.ADA_FULL, "full"), (nyc.ADA_ONE_WAY, "one_way")):
        for stop, spec in table.items():
            served = routes_at[stop]
            chosen = served if spec == "*" else set(spec.split())
            for route in chosen:
                key = (node_of_stop[stop], route)
                if acc.get(key) == "full":
                    continue
                acc[key] = mode
    write_csv(out_dir / "accessibility.csv", ["station_id", "line_id", "mode"],
              [[s, l, m] for (s, l), m in sorted(acc.items())])
    write_boroughs(out_dir / "boroughs.csv", nyc.BOROUGH_TABLE)
    write_reference(out_dir, nyc, set(nodes))


CITIES = (
    ("london", build_london),
    ("london_tube", lambda d: build_london_tube(d.parent / "london", d)),
    ("nyc", build_nyc),
)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    if args.check:
        with tempfile.TemporaryDirectory() as tmp:
            ok = True
            for city, fn in CITIES:
                d = pathlib.Path(tmp) / city
                d.mkdir()
                fn(d)
                for f in sorted(d.iterdir()):
                    if not filecmp.cmp(f, ROOT / "data" / city / f.name, shallow=False):
                        print(f"stale fixture: data/{city}/{f.name}", file=sys.stderr)
                        ok = False
            sys.exit(0 if ok else 1)
    for city, fn in CITIES:
        d = ROOT / "data" / city
        d.mkdir(parents=True, exist_ok=True)
        fn(d)


if __name__ == "__main__":
    main()
