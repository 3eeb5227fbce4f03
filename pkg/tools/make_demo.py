"""Regenerate the bundled demo corpus under src/biaslens/data/demo/.

Run from the repo root after changing anything here:

    python tools/make_demo.py

The demo is fully synthetic: five embedded themes (one single-newspaper, to
exercise the merge into noise), scattered noise articles, two German
articles for the language filter, noise-rule ad blocks, entity mentions with
offsets into cleaned bodies, and canned ontology replies (including fenced,
duplicate-key and garbage variants).
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from biaslens.corpus.models import Article, NoiseRule  # noqa: E402
from biaslens.corpus.cleaning import apply_noise_rules  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "src" / "biaslens" / "data" / "demo"

NEWSPAPERS = [
    {"id": "ap", "name": "Alda Post", "country": "Aldavia", "city": "Port Alda",
     "latitude": 41.2, "longitude": -3.4, "source_rank": 1},
    {"id": "bt", "name": "Beto Times", "country": "Betania", "city": "Beto",
     "latitude": 52.1, "longitude": 11.8, "source_rank": 2},
    {"id": "cg", "name": "Cove Gazette", "country": "Aldavia", "city": "Cove",
     "latitude": 39.9, "longitude": -1.1, "source_rank": 3},
    {"id": "dm", "name": "Dunmore Mail", "country": "Dunmore", "city": "Dun",
     "latitude": -33.5, "longitude": 150.9, "source_rank": 1},
    {"id": "eh", "name": "Esk Herald", "country": "Eskland", "city": "Esk"},
    {"id": "fc", "name": "Fallow Courier", "country": "Fallow", "city": "Fal"},
]

AD_BLOCK = "Advertisement\nBuy Aldavian sea salt today!\n---\n"
FOOTER = "\nSubscribe to Cove Gazette for unlimited access."

NOISE_RULES = [
    {"newspaper_id": "ap", "pattern": "Advertisement\\n.*?\\n---\\n", "order": 1},
    {"newspaper_id": "cg", "pattern": "\\nSubscribe to Cove Gazette[^\\n]*", "order": 1},
]

# themes: (key, center seed, article specs)
# each spec: (newspaper, title, body sentences, [entity surfaces])
BRIDGE = [
    ("ap", "Harbor Bridge collapse leaves Port Alda in chaos",
     "The Harbor Bridge fell into the bay at dawn. Mayor Ellen Voss called the collapse a disaster for Port Alda. The RoadWorks Agency had warned about corrosion last year.",
     ["Harbor Bridge", "Ellen Voss", "Port Alda", "RoadWorks Agency"]),
    ("ap", "Rescue crews praised after Harbor Bridge disaster",
     "Rescue teams pulled nine workers from the water near the Harbor Bridge. Ellen Voss thanked the crews for their courage. Port Alda declared three days of mourning.",
     ["Harbor Bridge", "Ellen Voss", "Port Alda"]),
    ("ap", "RoadWorks Agency faces lawsuit over bridge corrosion",
     "Families filed a lawsuit against the RoadWorks Agency. Inspectors had flagged the Harbor Bridge twice. The agency denies any failure.",
     ["RoadWorks Agency", "Harbor Bridge"]),
    ("bt", "Port Alda bridge collapse: what we know",
     "The Harbor Bridge in Port Alda collapsed on Tuesday. Officials fear the toll may rise. The RoadWorks Agency refused to comment.",
     ["Harbor Bridge", "Port Alda", "RoadWorks Agency"]),
    ("bt", "Engineers warn other cities after Port Alda disaster",
     "Engineers say the Harbor Bridge failure is a warning. Similar spans exist in four cities. Betania ordered urgent checks.",
     ["Harbor Bridge", "Port Alda"]),
    ("cg", "Hope on the waterfront as Port Alda rebuilds",
     "Volunteers brought relief to the harbor district. Ellen Voss promised a stronger bridge and a safe recovery for Port Alda. Donations doubled overnight.",
     ["Ellen Voss", "Port Alda"]),
    ("cg", "Harbor Bridge ferries bring recovery to commuters",
     "Temporary ferries now cross the bay. Commuters praised the quick help. Port Alda plans a memorial at the Harbor Bridge site.",
     ["Port Alda", "Harbor Bridge"]),
    ("dm", "Bridge collapse in Port Alda kills two workers",
     "Two maintenance workers died when the Harbor Bridge fell. The RoadWorks Agency suspended its chief inspector. Grief swept Port Alda.",
     ["Harbor Bridge", "RoadWorks Agency", "Port Alda"]),
    ("dm", "Dunmore sends engineers to Port Alda",
     "Dunmore dispatched a team to assess the wreck of the Harbor Bridge. The team will help Port Alda plan a safe rebuild.",
     ["Harbor Bridge", "Port Alda"]),
    ("eh", "Harbor Bridge failure blamed on corrosion",
     "A preliminary report blames salt corrosion for the Harbor Bridge failure. The RoadWorks Agency disputed the finding. Port Alda awaits the full audit.",
     ["Harbor Bridge", "RoadWorks Agency", "Port Alda"]),
    ("eh", "Mayor Voss under pressure after collapse",
     "Opposition members blame Ellen Voss for delayed repairs. The mayor defended her record. Port Alda council meets on Friday.",
     ["Ellen Voss", "Port Alda"]),
    ("fc", "Port Alda disaster prompts national bridge audit",
     "Fallow ordered an audit of every harbor span after the Port Alda collapse. The RoadWorks Agency model is under review.",
     ["Port Alda", "RoadWorks Agency"]),
    ("fc", "Survivors tell of escape from falling bridge",
     "A crane driver described the Harbor Bridge giving way beneath him. He swam to a buoy and was rescued. Port Alda honored the survivors.",
     ["Harbor Bridge", "Port Alda"]),
    ("ap", "Harbor Bridge memorial design unveiled",
     "Port Alda unveiled a memorial of steel arcs. Ellen Voss said the city will never forget. Construction starts in spring.",
     ["Port Alda", "Ellen Voss"]),
]

FESTIVAL = [
    ("ap", "Storm forces Starlight Festival to evacuate",
     "A sudden storm hit the Starlight Festival at Green Meadow. Organizers evacuated forty thousand fans. Nora Vale cut her set short.",
     ["Starlight Festival", "Green Meadow", "Nora Vale"]),
    ("bt", "Starlight Festival returns with triumphant finale",
     "The Starlight Festival closed with a triumphant show by Nora Vale. Fans celebrated under clear skies at Green Meadow. Organizers called it the best year yet.",
     ["Starlight Festival", "Nora Vale", "Green Meadow"]),
    ("bt", "Nora Vale donates festival earnings to flood relief",
     "Singer Nora Vale donated her Starlight Festival fee to flood relief. Fans praised the gesture. The charity thanked her warmly.",
     ["Nora Vale", "Starlight Festival"]),
    ("cg", "Mud and music: a weekend at Green Meadow",
     "Rain turned Green Meadow into a swamp but the Starlight Festival played on. Ponchos sold out within hours. Spirits stayed high.",
     ["Green Meadow", "Starlight Festival"]),
    ("cg", "Festival safety questioned after storm scare",
     "Critics say the Starlight Festival ignored storm warnings. Organizers defended the evacuation plan. Green Meadow will add shelters next year.",
     ["Starlight Festival", "Green Meadow"]),
    ("dm", "Starlight Festival sets attendance record",
     "The Starlight Festival drew its biggest crowd ever to Green Meadow. Local shops enjoyed a welcome boost. Traffic jams annoyed residents.",
     ["Starlight Festival", "Green Meadow"]),
    ("dm", "Nora Vale announces world tour at festival",
     "Nora Vale told Starlight Festival fans she will tour five continents. Tickets sold out in minutes. Critics expect a memorable tour.",
     ["Nora Vale", "Starlight Festival"]),
    ("eh", "Noise complaints cloud Starlight Festival",
     "Villagers near Green Meadow filed noise complaints against the Starlight Festival. Organizers promised quieter nights. Talks continue.",
     ["Green Meadow", "Starlight Festival"]),
    ("eh", "Festival economy lifts Green Meadow region",
     "Economists credit the Starlight Festival with a strong season for Green Meadow. Hotels reported full bookings. Farmers sold out of cider.",
     ["Starlight Festival", "Green Meadow"]),
    ("fc", "Starlight stage collapse averted by quick crew",
     "Riggers spotted a cracked beam before the Starlight Festival opened. The stage was repaired overnight. Nora Vale praised the crew as heroes.",
     ["Starlight Festival", "Nora Vale"]),
    ("fc", "Review: Nora Vale shines despite the rain",
     "Nora Vale delivered a luminous set at Green Meadow. The rain only made the lights brighter. A triumph of stagecraft.",
     ["Nora Vale", "Green Meadow"]),
    ("ap", "Starlight Festival tickets scam warning",
     "Police warn of fake Starlight Festival tickets. Dozens reported fraud. Buyers should use official channels only.",
     ["Starlight Festival"]),
]

SUMMIT = [
    ("ap", "Meridian Pact talks open in Velora",
     "Ministers met in Velora to extend the Meridian Pact. Arif Khoun urged cooperation on tariffs. Observers expect progress.",
     ["Meridian Pact", "Velora", "Arif Khoun"]),
    ("bt", "Velora summit ends without tariff agreement",
     "The Meridian Pact summit in Velora ended in dispute. Arif Khoun blamed rigid negotiating positions. Talks resume next quarter.",
     ["Meridian Pact", "Velora", "Arif Khoun"]),
    ("bt", "Khoun defends pact against critics at home",
     "Arif Khoun told parliament the Meridian Pact protects jobs. Opponents call it a burden. A vote is expected soon.",
     ["Arif Khoun", "Meridian Pact"]),
    ("cg", "Small nations seek voice in Meridian Pact",
     "Delegates from coastal states asked for fair quotas under the Meridian Pact. Velora hosted a side forum. Hopes are modest.",
     ["Meridian Pact", "Velora"]),
    ("cg", "Velora summit boosts local business",
     "Hotels in Velora celebrated a full week thanks to the Meridian Pact summit. Restaurants hired extra staff. The city wants more events.",
     ["Velora", "Meridian Pact"]),
    ("dm", "Analysis: what the Meridian Pact means for farmers",
     "Farm exports depend on the Meridian Pact corridors. Arif Khoun promised protection for growers. Skeptics fear cheap imports.",
     ["Meridian Pact", "Arif Khoun"]),
    ("dm", "Dunmore weighs joining Meridian Pact",
     "Dunmore sent observers to Velora. Joining the Meridian Pact could lift trade by a tenth. A decision is due in autumn.",
     ["Velora", "Meridian Pact"]),
    ("eh", "Protesters march against pact in Velora",
     "Hundreds marched in Velora against the Meridian Pact. Unions fear wage pressure. Police reported a calm evening.",
     ["Velora", "Meridian Pact"]),
    ("eh", "Pact extension wins cautious praise",
     "Economists gave cautious praise to the Meridian Pact extension. Arif Khoun called it a success for Velora. Markets rose slightly.",
     ["Meridian Pact", "Arif Khoun", "Velora"]),
    ("fc", "Meridian Pact: five things to watch",
     "The Meridian Pact covers ports, tariffs and data. Velora wants a digital annex. Arif Khoun hints at compromise.",
     ["Meridian Pact", "Velora", "Arif Khoun"]),
    ("fc", "Trade summit photo diary from Velora",
     "Our photographer followed delegates through Velora. From dawn runs to midnight drafts of the Meridian Pact. A summit in pictures.",
     ["Velora", "Meridian Pact"]),
    ("ap", "Editorial: the pact needs teeth",
     "The Meridian Pact lacks enforcement. Arif Khoun should push for binding panels. Otherwise the dispute will repeat.",
     ["Meridian Pact", "Arif Khoun"]),
]

VOLCANO = [
    ("ap", "Mount Kelda erupts, villages evacuated",
     "Mount Kelda erupted overnight. The Civil Safety Office evacuated three villages. Ash closed the eastern airport.",
     ["Mount Kelda", "Civil Safety Office"]),
    ("bt", "Ash cloud from Mount Kelda disrupts flights",
     "Airlines cancelled flights as ash from Mount Kelda drifted east. The Kelda Observatory expects more tremors. Travelers face delays.",
     ["Mount Kelda", "Kelda Observatory"]),
    ("cg", "Farmers count losses under Kelda ash",
     "Ash from Mount Kelda coated orchards. The Civil Safety Office promised aid. Harvest losses may reach half.",
     ["Mount Kelda", "Civil Safety Office"]),
    ("dm", "Mount Kelda eruption weakens, observatory says",
     "The Kelda Observatory reported weakening tremors at Mount Kelda. Villagers may return within days. Masks remain advised.",
     ["Kelda Observatory", "Mount Kelda"]),
    ("dm", "Relief flows to Kelda valley",
     "Trucks of relief reached the Kelda valley. The Civil Safety Office praised volunteers. Schools reopen on Monday.",
     ["Civil Safety Office"]),
    ("eh", "Scientists flock to Mount Kelda",
     "Volcanologists from nine countries arrived at the Kelda Observatory. Mount Kelda offers a rare study chance. Data will be shared openly.",
     ["Kelda Observatory", "Mount Kelda"]),
    ("eh", "Tourism fears after Kelda eruption",
     "Resorts fear a lost season after Mount Kelda erupted. The Civil Safety Office says trails may reopen soon. Bookings dipped sharply.",
     ["Mount Kelda", "Civil Safety Office"]),
    ("fc", "Kelda ash brings spectacular sunsets",
     "The ash veil from Mount Kelda painted the skies crimson. Photographers celebrate the spectacle. Scientists note it will fade.",
     ["Mount Kelda"]),
    ("fc", "Insurers brace for Kelda claims",
     "Insurers expect heavy claims from the Mount Kelda eruption. The Civil Safety Office logged four hundred damaged roofs.",
     ["Mount Kelda", "Civil Safety Office"]),
    ("bt", "Volcano chaos strands Betania hikers",
     "Twelve hikers from Betania sheltered near Mount Kelda. Rescue teams reached them unharmed. Families wept with relief.",
     ["Mount Kelda"]),
]

CHESS = [
    ("eh", "Alda Chess Open crowns youngest champion",
     "Rin Maro won the Alda Chess Open at fifteen. The prodigy beat three grandmasters. A star is born.",
     ["Rin Maro", "Alda Chess Open"]),
    ("eh", "Chess fever grips Esk after Maro triumph",
     "Clubs across Esk report record signups after Rin Maro's Alda Chess Open victory. Schools add chess hours.",
     ["Rin Maro", "Alda Chess Open"]),
    ("eh", "Maro to defend title next spring",
     "Rin Maro confirmed a title defense at the Alda Chess Open. Sponsors line up. Rivals study her games.",
     ["Rin Maro", "Alda Chess Open"]),
    ("eh", "Inside the Alda Chess Open hall",
     "Silence, clocks and nerves at the Alda Chess Open. Our reporter spent a day among the boards with Rin Maro's fans.",
     ["Alda Chess Open", "Rin Maro"]),
    ("eh", "Maro's coach reveals training secrets",
     "Hours of endgame drills shaped Rin Maro before the Alda Chess Open. Her coach favors classical studies over engines.",
     ["Rin Maro", "Alda Chess Open"]),
    ("eh", "Sponsors court Alda Chess Open stars",
     "Watchmakers and airlines queue for Rin Maro. The Alda Chess Open has never drawn such attention. Prize funds may double.",
     ["Rin Maro", "Alda Chess Open"]),
]

NOISE_ARTICLES = [
    ("ap", "Recipe corner: autumn squash soup",
     "Peel the squash and roast it with thyme. Blend with stock. Serve with warm bread and a pinch of pepper."),
    ("bt", "Quiz night results from the Beto library",
     "Team Bookworms won by two points. The tiebreaker asked about rivers. Next quiz is in two weeks."),
    ("cg", "Tide tables for the coming week",
     "High tide shifts later each day this week. Anglers should check the harbor board. Mind the spring currents."),
    ("fc", "Stargazers' diary: a comet returns",
     "Comet Vell returns to the northern sky. Look east after midnight. Binoculars will do fine."),
]

GERMAN = [
    ("dm", "Stadtrat beschließt neue Radwege",
     "Der Stadtrat hat am Donnerstag beschlossen, im kommenden Jahr zwölf Kilometer neue Radwege zu bauen. Die Kosten werden aus dem Verkehrshaushalt gedeckt und die Arbeiten beginnen im Frühjahr.",
     "de"),
    ("dm", "Museum zeigt Schätze aus dem Bergwerk",
     "Das Stadtmuseum eröffnet eine Ausstellung über den Bergbau der Region. Gezeigt werden Werkzeuge, Karten und Fotografien aus über zwei Jahrhunderten Arbeit unter Tage.",
     None),
]

THEMES = [
    ("bridge", BRIDGE, np.array([10, 0, 0, 0, 0, 0, 0, 0], dtype=float)),
    ("festival", FESTIVAL, np.array([0, 10, 0, 0, 0, 0, 0, 0], dtype=float)),
    ("summit", SUMMIT, np.array([0, 0, 10, 0, 0, 0, 0, 0], dtype=float)),
    ("volcano", VOLCANO, np.array([0, 0, 0, 10, 0, 0, 0, 0], dtype=float)),
    ("chess", CHESS, np.array([0, 0, 0, 0, 10, 0, 0, 0], dtype=float)),
]

ENTITY_GROUPS = {
    "Harbor Bridge": "LOC", "Ellen Voss": "PER", "Port Alda": "LOC",
    "RoadWorks Agency": "ORG", "Starlight Festival": "MISC",
    "Green Meadow": "LOC", "Nora Vale": "PER", "Meridian Pact": "MISC",
    "Velora": "LOC", "Arif Khoun": "PER", "Mount Kelda": "LOC",
    "Civil Safety Office": "ORG", "Kelda Observatory": "ORG",
    "Rin Maro": "PER", "Alda Chess Open": "MISC",
}


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(2024)
    articles, embeddings = [], []
    theme_of = {}

    counter = 0

    def next_id():
        nonlocal counter
        counter += 1
        return f"art{counter:03d}"

    day = 0
    for theme_key, specs, center in THEMES:
        for np_id, title, body, _ in specs:
            aid = next_id()
            theme_of[aid] = theme_key
            if np_id == "ap":
                body = AD_BLOCK + body
            if np_id == "cg":
                body = body + FOOTER
            articles.append(
                {
                    "id": aid, "newspaper_id": np_id, "title": title,
                    "body": body,
                    "published_at": f"2023-10-{(day % 28) + 1:02d}",
                    "url": f"https://example.org/{aid}",
                    "language_tag": "en",
                }
            )
            embeddings.append(
                {"id": aid, "vector": center + rng.normal(0, 0.5, 8)}
            )
            day += 1

    for i, (np_id, title, body) in enumerate(NOISE_ARTICLES):
        aid = next_id()
        theme_of[aid] = "noise"
        articles.append(
            {
                "id": aid, "newspaper_id": np_id, "title": title, "body": body,
                "published_at": f"2023-10-{(day % 28) + 1:02d}",
                "url": f"https://example.org/{aid}", "language_tag": "en",
            }
        )
        corner = np.full(8, -8.0) + np.array([i * 23.0] * 8)
        embeddings.append({"id": aid, "vector": corner + rng.normal(0, 0.5, 8)})
        day += 1

    for np_id, title, body, tag in GERMAN:
        aid = next_id()
        theme_of[aid] = "german"
        rec = {
            "id": aid, "newspaper_id": np_id, "title": title, "body": body,
            "published_at": f"2023-11-{(day % 28) + 1:02d}",
            "url": f"https://example.org/{aid}",
        }
        if tag:
            rec["language_tag"] = tag
        articles.append(rec)
        embeddings.append({"id": aid, "vector": rng.normal(0, 1, 8) + 40.0})
        day += 1

    assert len(articles) == 60, len(articles)

    rules = [NoiseRule(**r) for r in NOISE_RULES]
    cleaned = {}
    for rec in articles:
        art = Article(
            id=rec["id"], newspaper_id=rec["newspaper_id"],
            title=rec["title"], body=rec["body"],
        )
        cleaned[rec["id"]] = apply_noise_rules(art, rules).body

    mentions = []
    mid = 0
    for rec in articles:
        specs = {s[1]: s for t, group, _ in THEMES for s in group}
        body = cleaned[rec["id"]]
        spec_entities = []
        for _, group, _ in THEMES:
            for np_id, title, _, ents in group:
                if title == rec["title"]:
                    spec_entities = ents
        for surface in spec_entities:
            start = 0
            while True:
                pos = body.find(surface, start)
                if pos == -1:
                    break
                mid += 1
                mentions.append(
                    {
                        "mention_id": f"m{mid:04d}",
                        "article_id": rec["id"],
                        "entity_group": ENTITY_GROUPS[surface],
                        "surface": surface,
                        "detector_score": 0.95,
                        "start": pos,
                        "end": pos + len(surface),
                    }
                )
                start = pos + len(surface)

    replies = []
    for rec in articles:
        aid = rec["id"]
        theme = theme_of[aid]
        if theme == "german":
            continue
        if aid == "art058":  # stargazer noise article: a hopeless extraction
            replies.append({"article_id": aid, "reply": "I cannot find an ontology here."})
            continue
        reply = _reply_for(aid, theme, rec)
        replies.append({"article_id": aid, "reply": reply})

    _write("newspapers.json", json.dumps(NEWSPAPERS, indent=2) + "\n")
    _write("articles.jsonl", _jsonl(articles))
    _write("noise_rules.json", json.dumps(NOISE_RULES, indent=2) + "\n")
    _write(
        "embeddings.jsonl",
        _jsonl(
            {"article_id": e["id"], "vector": [round(float(x), 6) for x in e["vector"]]}
            for e in embeddings
        ),
    )
    _write("entities.jsonl", _jsonl(mentions))
    _write("canned_replies.jsonl", _jsonl(replies))
    print(f"wrote demo corpus to {OUT}: {len(articles)} articles, "
          f"{len(mentions)} mentions, {len(replies)} replies")


def _reply_for(aid: str, theme: str, rec: dict) -> str:
    ontologies = {
        "bridge": {
            "Class": ["Structure", "Person", "Place", "Organization"],
            "Object": [
                {"Name": "Harbor Bridge", "InstanceOf": "Structure"},
                {"Name": "Port Alda", "InstanceOf": "Place"},
                {"Name": "Ellen Voss", "InstanceOf": "Person"},
                {"Name": "RoadWorks Agency", "InstanceOf": "Organization"},
            ],
            "Relationship": {
                "collapses in": {"RelationshipFrom": "Harbor Bridge",
                                 "RelationshipTo": "Port Alda"},
                "governs": {"RelationshipFrom": "Ellen Voss",
                            "RelationshipTo": "Port Alda"},
                "maintains": {"RelationshipFrom": "RoadWorks Agency",
                              "RelationshipTo": "Harbor Bridge"},
            },
        },
        "festival": {
            "Class": ["Event", "Person", "Place"],
            "Object": [
                {"Name": "Starlight Festival", "InstanceOf": "Event"},
                {"Name": "Nora Vale", "InstanceOf": "Person"},
                {"Name": "Green Meadow", "InstanceOf": "Place"},
            ],
            "Relationship": {
                "performs at": {"RelationshipFrom": "Nora Vale",
                                "RelationshipTo": "Starlight Festival"},
                "takes place in": {"RelationshipFrom": "Starlight Festival",
                                   "RelationshipTo": "Green Meadow"},
            },
        },
        "summit": {
            "Class": ["Agreement", "Person", "Place"],
            "Object": [
                {"Name": "Meridian Pact", "InstanceOf": "Agreement"},
                {"Name": "Arif Khoun", "InstanceOf": "Person"},
                {"Name": "Velora", "InstanceOf": "Place"},
            ],
            "Relationship": {
                "negotiates": {"RelationshipFrom": "Arif Khoun",
                               "RelationshipTo": "Meridian Pact"},
                "hosts": {"RelationshipFrom": "Velora",
                          "RelationshipTo": "Meridian Pact"},
            },
        },
        "volcano": {
            "Class": ["Volcano", "Organization"],
            "Object": [
                {"Name": "Mount Kelda", "InstanceOf": "Volcano"},
                {"Name": "Civil Safety Office", "InstanceOf": "Organization"},
                {"Name": "Kelda Observatory", "InstanceOf": "Organization"},
            ],
            "Relationship": {
                "monitors": {"RelationshipFrom": "Kelda Observatory",
                             "RelationshipTo": "Mount Kelda"},
                "responds to": {"RelationshipFrom": "Civil Safety Office",
                                "RelationshipTo": "Mount Kelda"},
            },
        },
        "chess": {
            "Class": ["Person", "Event"],
            "Object": [
                {"Name": "Rin Maro", "InstanceOf": "Person"},
                {"Name": "Alda Chess Open", "InstanceOf": "Event"},
            ],
            "Relationship": {
                "wins": {"RelationshipFrom": "Rin Maro",
                         "RelationshipTo": "Alda Chess Open"},
            },
        },
        "noise": {
            "Class": ["Thing"],
            "Object": [{"Name": "Everyday item", "InstanceOf": "Thing"}],
            "Relationship": {},
        },
    }
    base = json.loads(json.dumps(ontologies[theme]))
    # per-article variations exercising the tolerant parser and the checks
    if aid == "art001":
        base["Object"][0]["Name"] = "HARBOR BRIDGE"  # case variant, merges
        base["Relationship"]["collapses in"]["RelationshipFrom"] = "HARBOR BRIDGE"
        base["Relationship"]["maintains"]["RelationshipTo"] = "HARBOR BRIDGE"
    if aid == "art004":
        # broken endpoint: fails the object-relation check, pruned later
        base["Relationship"]["cited by"] = {
            "RelationshipFrom": "Safety Report", "RelationshipTo": "Harbor Bridge",
        }
    if aid == "art016":
        # duplicate object: fails the object-object check
        base["Object"].append({"Name": "Nora Vale", "InstanceOf": "Person"})
    if aid == "art028":
        # unknown class: fails the object-class check
        base["Object"].append({"Name": "Tariff Annex", "InstanceOf": "Document"})
    text = json.dumps(base, indent=2)
    if aid.endswith("5"):
        text = f"```json\n{text}\n```"
    elif aid.endswith("7"):
        text = "Here is the requested ontology:\n" + text
    return text


def _jsonl(records) -> str:
    return "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records)


def _write(name: str, content: str) -> None:
    (OUT / name).write_text(content, encoding="utf-8")


if __name__ == "__main__":
    main()
