#!/usr/bin/env python3
"""Generate the bundled NLP data files from the curated seed lists below.

Writes into src/seopinion/nlp/data/:
  tag_lexicon.tsv       word -> coarse tag, curated + morphological expansion
  sentiment_lexicon.tsv lemma -> pos/neg scores in [0, 1]
  embeddings_50d.txt    50-dim word vectors with a designed similarity
                        structure for the product-review domain

Everything is deterministic (fixed RNG seed); rerunning reproduces the
committed files byte for byte. The vector space is constructed, not trained:
domain words get exact pairwise cosines from a factorized Gram matrix,
related words are placed near an anchor, and the remaining vocabulary gets
random directions that are rejection-sampled to stay dissimilar from the
domain words.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parents[1]
DATA = ROOT / "src" / "seopinion" / "nlp" / "data"
DIM = 50
SEED = 42

# ---------------------------------------------------------------------------
# curated tag lists (first occurrence wins on conflicts)
# ---------------------------------------------------------------------------

ADVERBS = """
very really quite extremely pretty fairly rather somewhat incredibly surprisingly
amazingly exceptionally especially particularly honestly frankly unfortunately sadly
luckily thankfully definitely certainly absolutely totally completely perfectly highly
truly deeply utterly well badly poorly quickly slowly easily smoothly quietly loudly
barely hardly nearly almost already still even also often sometimes usually normally
typically generally always never rarely seldom overall instead together soon lately
recently currently immediately instantly eventually finally initially originally
constantly consistently repeatedly occasionally daily actually seriously literally
basically essentially reasonably sufficiently flawlessly beautifully nicely greatly
happily terribly horribly far away again
""".split()

ADJECTIVES = """
good great nice excellent amazing awesome fantastic wonderful perfect beautiful
gorgeous stunning superb outstanding brilliant impressive remarkable exceptional
incredible marvelous splendid terrific fabulous delightful lovely pleasant enjoyable
satisfying solid sturdy durable robust reliable dependable decent fine okay acceptable
satisfactory adequate sufficient worthwhile valuable useful handy practical functional
versatile sharp crisp clear vivid bright vibrant colorful rich deep accurate precise
smooth fast quick speedy snappy responsive instant efficient powerful capable strong
quiet silent cool lightweight light thin slim sleek slender portable compact small
tiny mini comfortable cozy ergonomic easy simple intuitive straightforward effortless
convenient accessible affordable inexpensive economical reasonable fair happy pleased
satisfied delighted glad thrilled excited impressed grateful thankful content proud
confident new modern current latest recent fresh original genuine authentic official
premium professional deluxe fancy elegant stylish attractive handsome clean neat tidy
bad terrible horrible awful poor dreadful atrocious abysmal lousy crappy mediocre
subpar inferior disappointing disappointed unsatisfied dissatisfied unhappy upset
angry furious annoyed frustrated frustrating annoying irritating infuriating
aggravating slow sluggish laggy unresponsive choppy jerky glitchy buggy unstable
unreliable inconsistent defective faulty broken damaged cracked scratched dented bent
warped dead lifeless useless worthless pointless hopeless flimsy fragile cheap brittle
weak feeble loose wobbly shaky loud noisy hot warm overheated heavy bulky thick clunky
chunky awkward clumsy uncomfortable painful difficult hard complicated complex
confusing unclear misleading deceptive dishonest wrong incorrect missing incomplete
insufficient inadequate limited restricted expensive pricey costly overpriced
unaffordable dull dim dark blurry fuzzy grainy faded washed pale cloudy murky stiff
rigid tight sticky long short big large huge enormous massive giant wide narrow tall
shallow full empty high low extra additional spare main primary secondary minor major
serious severe slight subtle noticeable obvious evident apparent visible invisible
wireless wired digital optical internal external physical virtual automatic manual
standard basic advanced sophisticated glossy matte metallic silver black white blue
red gray green golden better best worse worst important essential critical crucial
necessary optional worth hd touchable last
""".split()

# each tuple is one verb with its common inflections; all forms are tagged VERB
VERB_GROUPS = [
    ("work", "works", "worked", "working"),
    ("run", "runs", "ran", "running"),
    ("boots", "booted", "booting"),
    ("load", "loads", "loaded", "loading"),
    ("charges", "charged", "charging"),
    ("lasts", "lasted", "lasting"),
    ("arrive", "arrives", "arrived", "arriving"),
    ("buy", "buys", "bought", "buying"),
    ("purchased", "purchasing"),
    ("pay", "pays", "paid", "paying"),
    ("spend", "spends", "spent", "spending"),
    ("recommend", "recommends", "recommended", "recommending"),
    ("love", "loves", "loved", "loving"),
    ("hate", "hates", "hated", "hating"),
    ("like", "likes", "liked", "liking"),
    ("dislike", "dislikes", "disliked"),
    ("enjoy", "enjoys", "enjoyed", "enjoying"),
    ("prefer", "prefers", "preferred"),
    ("use", "uses", "used", "using"),
    ("returned", "returning"),
    ("exchanged", "exchanging"),
    ("refunded", "refunding"),
    ("replace", "replaces", "replaced", "replacing"),
    ("repaired", "repairing"),
    ("fix", "fixes", "fixed", "fixing"),
    ("break", "breaks", "broke", "breaking"),
    ("crashes", "crashed", "crashing"),
    ("freezes", "froze", "frozen", "freezing"),
    ("die", "dies", "died", "dying"),
    ("fail", "fails", "failed", "failing"),
    ("stop", "stops", "stopped", "stopping"),
    ("start", "starts", "started", "starting"),
    ("restarted", "restarting"),
    ("reboots", "rebooted", "rebooting"),
    ("ship", "ships", "shipped"),
    ("deliver", "delivers", "delivered", "delivering"),
    ("send", "sends", "sent", "sending"),
    ("receive", "receives", "received", "receiving"),
    ("ordered", "ordering"),
    ("install", "installs", "installed", "installing"),
    ("updated", "updating"),
    ("upgraded", "upgrading"),
    ("download", "downloads", "downloaded", "downloading"),
    ("connect", "connects", "connected", "connecting"),
    ("disconnects", "disconnected"),
    ("type", "types", "typed", "typing"),
    ("click", "clicks", "clicked", "clicking"),
    ("scrolls", "scrolled", "scrolling"),
    ("swiped", "swiping"),
    ("play", "plays", "played", "playing"),
    ("watch", "watches", "watched", "watching"),
    ("streams", "streamed"),
    ("browse", "browses", "browsed", "browsing"),
    ("open", "opens", "opened", "opening"),
    ("close", "closes", "closing"),
    ("turn", "turns", "turned", "turning"),
    ("switches", "switched", "switching"),
    ("press", "presses", "pressed", "pressing"),
    ("hold", "holds", "held", "holding"),
    ("keep", "keeps", "kept", "keeping"),
    ("take", "takes", "took", "taken", "taking"),
    ("make", "makes", "made", "making"),
    ("come", "comes", "came", "coming"),
    ("go", "goes", "went", "gone", "going"),
    ("get", "gets", "got", "gotten", "getting"),
    ("give", "gives", "gave", "given", "giving"),
    ("put", "puts", "putting"),
    ("say", "says", "said", "saying"),
    ("tell", "tells", "told", "telling"),
    ("know", "knows", "knew", "known", "knowing"),
    ("think", "thinks", "thought", "thinking"),
    ("feel", "feels", "felt", "feeling"),
    ("seem", "seems", "seemed"),
    ("appear", "appears", "appeared"),
    ("look", "looks", "looked", "looking"),
    ("sounds", "sounded"),
    ("want", "wants", "wanted", "wanting"),
    ("need", "needs", "needed", "needing"),
    ("try", "tries", "tried", "trying"),
    ("expect", "expects", "expected", "expecting"),
    ("hope", "hopes", "hoped", "hoping"),
    ("wish", "wishes", "wished"),
    ("suggest", "suggests", "suggested"),
    ("notice", "notices", "noticed"),
    ("realize", "realized"),
    ("regret", "regrets", "regretted"),
    ("waste", "wastes", "wasted", "wasting"),
    ("save", "saves", "saved", "saving"),
    ("perform", "performs", "performed"),
    ("handle", "handles", "handled", "handling"),
    ("manage", "manages", "managed"),
    ("struggle", "struggles", "struggled", "struggling"),
    ("complain", "complains", "complained", "complaining"),
    ("praised", "praising"),
    ("impress", "impresses", "impressing"),
    ("amaze", "amazes", "amazed"),
    ("disappoint", "disappoints"),
    ("satisfy", "satisfies"),
    ("costs", "costing"),
    ("lags", "lagged", "lagging"),
    ("overheats", "overheated", "overheating"),
    ("drain", "drains", "drained", "draining"),
    ("flickers", "flickered", "flickering"),
    ("fit", "fits", "fitted", "fitting"),
    ("matched", "matching"),
    ("compare", "compares", "compared", "comparing"),
    ("reviewed", "reviewing"),
    ("rate", "rates", "rated"),
    ("read", "reads", "reading"),
    ("write", "writes", "wrote", "written", "writing"),
    ("mention", "mentions", "mentioned"),
    ("describe", "describes", "described"),
    ("advertised", "advertising"),
    ("claim", "claims", "claimed"),
    ("worry", "worries", "worried", "worrying"),
    ("bother", "bothers", "bothered"),
    ("helps", "helped", "helping"),
    ("include", "includes", "included", "including"),
    ("contain", "contains", "contained"),
    ("offers", "offered"),
    ("provide", "provides", "provided"),
    ("allow", "allows", "allowed"),
    ("avoid", "avoids", "avoided"),
    ("consider", "considers", "considered"),
    ("decide", "decides", "decided"),
    ("choose", "chooses", "chose", "chosen", "choosing"),
    ("pick", "picks", "picked"),
    ("wait", "waits", "waited", "waiting"),
    ("stay", "stays", "stayed"),
    ("remain", "remains", "remained"),
    ("win", "wins", "won", "winning"),
    ("lose", "loses", "lost", "losing"),
]

NOUNS = """
screen display resolution monitor pixel brightness contrast glare bezel panel lcd
backlight color hue laptop computer notebook desktop machine device product item model
unit gadget electronics brand manufacturer company seller vendor store shop website
site page listing description spec specification detail information info feature
function option setting mode configuration battery power charge charger adapter cord
cable outlet plug socket port usb hdmi jack slot drive ssd hdd disk storage memory ram
gigabyte terabyte processor cpu chip core speed performance benchmark card motherboard
fan cooling vent airflow heat temperature noise keyboard key trackpad touchpad mouse
button stylus pen speaker sound audio volume bass microphone camera webcam video photo
picture image quality price cost value money dollar cent budget deal discount sale
bargain coupon purchase order invoice receipt shipping delivery package box carton
packaging warranty guarantee support service return refund replacement exchange
condition shape size weight dimension design build construction material aluminum
metal plastic glass rubber hinge chassis lid case cover sleeve bag finish surface
texture feel look style appearance time day week month year hour minute second moment
morning afternoon evening night today yesterday tomorrow work job task chore usage
user owner buyer customer consumer person man woman guy kid child student teacher
family wife husband son daughter friend colleague experience impression opinion review
rating star score feedback comment remark complaint praise recommendation suggestion
problem issue trouble error bug defect flaw fault damage scratch crack dent mark spot
stain setup installation software hardware firmware windows linux system os program
application app browser internet wifi bluetooth connection network signal reception
router modem game gaming movie film music song playlist file folder document email
message word text number amount quantity level degree point reason purpose goal aim
benefit advantage disadvantage drawback downside upside pro con minus thing stuff way
manner method approach part piece component element bit lot bunch pair couple set kit
bundle accessory peripheral attachment upgrade update version edition generation
series touchscreen touch tablet phone smartphone dock station stand mount arm desk
table chair office home house room bedroom kitchen school college university class
course lesson boot startup shutdown restart login password account profile data backup
life lifespan runtime span durability reliability sturdiness portability compatibility
connectivity functionality usability convenience comfort ease simplicity difficulty
complexity clarity sharpness gift present surprise credit travel trip vacation journey
commute flight train bus car vehicle inch pound ounce gram kilogram meter centimeter
joy fun pleasure thanks bonus nightmare disaster horror mess junk garbage trash scam
ripoff pain failure sadness happiness
""".split()

# ---------------------------------------------------------------------------
# curated sentiment scores: (word, pos, neg), scores in [0, 1]
# verb bases are expanded with their inflections from VERB_GROUPS
# ---------------------------------------------------------------------------

SENTIMENT: list[tuple[str, float, float]] = [
    # strong positive
    ("excellent", 0.90, 0.0), ("amazing", 0.85, 0.0), ("awesome", 0.85, 0.0),
    ("fantastic", 0.85, 0.0), ("wonderful", 0.80, 0.0), ("outstanding", 0.85, 0.0),
    ("superb", 0.85, 0.0), ("brilliant", 0.80, 0.0), ("incredible", 0.80, 0.0),
    ("stunning", 0.80, 0.0), ("gorgeous", 0.80, 0.0), ("marvelous", 0.80, 0.0),
    ("terrific", 0.80, 0.0), ("fabulous", 0.80, 0.0), ("perfect", 0.85, 0.0),
    ("great", 0.80, 0.0), ("exceptional", 0.80, 0.0), ("best", 0.80, 0.0),
    ("delighted", 0.80, 0.0), ("thrilled", 0.80, 0.0), ("flawlessly", 0.65, 0.0),
    # positive
    ("good", 0.70, 0.0), ("lovely", 0.70, 0.0), ("delightful", 0.75, 0.0),
    ("beautiful", 0.75, 0.0), ("impressive", 0.70, 0.0), ("remarkable", 0.70, 0.0),
    ("nice", 0.60, 0.0), ("pleasant", 0.60, 0.0), ("enjoyable", 0.65, 0.0),
    ("satisfying", 0.65, 0.0), ("happy", 0.65, 0.0), ("pleased", 0.65, 0.0),
    ("satisfied", 0.60, 0.0), ("glad", 0.55, 0.0), ("excited", 0.65, 0.0),
    ("impressed", 0.65, 0.0), ("grateful", 0.60, 0.0), ("thankful", 0.60, 0.0),
    ("proud", 0.55, 0.0), ("love", 0.75, 0.0), ("enjoy", 0.60, 0.0),
    ("like", 0.40, 0.0), ("recommend", 0.60, 0.0), ("amaze", 0.70, 0.0),
    ("satisfy", 0.55, 0.0), ("praise", 0.60, 0.0), ("win", 0.55, 0.0),
    ("joy", 0.70, 0.0), ("fun", 0.60, 0.0), ("pleasure", 0.60, 0.0),
    ("thanks", 0.50, 0.0), ("bonus", 0.50, 0.0), ("bargain", 0.60, 0.0),
    ("benefit", 0.45, 0.0), ("advantage", 0.45, 0.0), ("upside", 0.40, 0.0),
    ("perfectly", 0.60, 0.0), ("beautifully", 0.60, 0.0), ("nicely", 0.50, 0.0),
    ("smoothly", 0.50, 0.0), ("happily", 0.50, 0.0), ("greatly", 0.40, 0.0),
    ("easily", 0.45, 0.0),
    # moderate positive
    ("solid", 0.55, 0.0), ("sturdy", 0.50, 0.0), ("durable", 0.55, 0.0),
    ("robust", 0.50, 0.0), ("reliable", 0.60, 0.0), ("dependable", 0.60, 0.0),
    ("worthwhile", 0.55, 0.0), ("valuable", 0.50, 0.0), ("useful", 0.50, 0.0),
    ("handy", 0.45, 0.0), ("practical", 0.40, 0.0), ("sharp", 0.45, 0.0),
    ("crisp", 0.55, 0.0), ("clear", 0.50, 0.0), ("vivid", 0.55, 0.0),
    ("bright", 0.50, 0.0), ("vibrant", 0.55, 0.0), ("colorful", 0.45, 0.0),
    ("rich", 0.45, 0.0), ("smooth", 0.55, 0.0), ("fast", 0.55, 0.0),
    ("quick", 0.50, 0.0), ("speedy", 0.55, 0.0), ("snappy", 0.50, 0.0),
    ("responsive", 0.55, 0.0), ("efficient", 0.55, 0.0), ("powerful", 0.55, 0.0),
    ("capable", 0.45, 0.0), ("strong", 0.45, 0.0), ("quiet", 0.45, 0.0),
    ("comfortable", 0.50, 0.0), ("cozy", 0.50, 0.0), ("easy", 0.50, 0.0),
    ("effortless", 0.55, 0.0), ("convenient", 0.50, 0.0), ("affordable", 0.50, 0.0),
    ("inexpensive", 0.45, 0.0), ("economical", 0.45, 0.0), ("worth", 0.50, 0.0),
    ("premium", 0.45, 0.0), ("elegant", 0.55, 0.0), ("stylish", 0.50, 0.0),
    ("attractive", 0.55, 0.0), ("sleek", 0.50, 0.0), ("clean", 0.40, 0.0),
    ("lightweight", 0.40, 0.0), ("portable", 0.40, 0.0), ("better", 0.50, 0.0),
    ("fresh", 0.40, 0.0), ("genuine", 0.40, 0.0), ("intuitive", 0.50, 0.0),
    # weak positive
    ("decent", 0.40, 0.0), ("fine", 0.35, 0.0), ("okay", 0.30, 0.0),
    ("acceptable", 0.35, 0.0), ("satisfactory", 0.40, 0.0), ("adequate", 0.30, 0.0),
    ("reasonable", 0.40, 0.0), ("fair", 0.35, 0.0), ("simple", 0.40, 0.0),
    ("compact", 0.35, 0.0), ("slim", 0.35, 0.0), ("helps", 0.40, 0.0),
    # mixed
    ("cheap", 0.25, 0.25),
    # strong negative
    ("terrible", 0.0, 0.90), ("horrible", 0.0, 0.90), ("awful", 0.0, 0.85),
    ("dreadful", 0.0, 0.80), ("atrocious", 0.0, 0.85), ("abysmal", 0.0, 0.85),
    ("worst", 0.0, 0.90), ("hate", 0.0, 0.80), ("worthless", 0.0, 0.80),
    ("useless", 0.0, 0.75), ("nightmare", 0.0, 0.75), ("disaster", 0.0, 0.80),
    ("horror", 0.0, 0.70), ("scam", 0.0, 0.85), ("ripoff", 0.0, 0.80),
    ("furious", 0.0, 0.75), ("infuriating", 0.0, 0.75), ("garbage", 0.0, 0.70),
    # negative
    ("bad", 0.0, 0.70), ("poor", 0.0, 0.65), ("lousy", 0.0, 0.70),
    ("crappy", 0.0, 0.70), ("disappointing", 0.0, 0.70), ("disappointed", 0.0, 0.70),
    ("disappoint", 0.0, 0.65), ("unsatisfied", 0.0, 0.60), ("dissatisfied", 0.0, 0.65),
    ("unhappy", 0.0, 0.60), ("upset", 0.0, 0.55), ("angry", 0.0, 0.60),
    ("annoyed", 0.0, 0.55), ("frustrated", 0.0, 0.65), ("frustrating", 0.0, 0.70),
    ("annoying", 0.0, 0.65), ("irritating", 0.0, 0.60), ("defective", 0.0, 0.70),
    ("faulty", 0.0, 0.65), ("broken", 0.0, 0.65), ("broke", 0.0, 0.50),
    ("damaged", 0.0, 0.60), ("dead", 0.0, 0.60), ("flimsy", 0.0, 0.60),
    ("pointless", 0.0, 0.60), ("hopeless", 0.0, 0.65), ("misleading", 0.0, 0.60),
    ("deceptive", 0.0, 0.65), ("dishonest", 0.0, 0.70), ("overpriced", 0.0, 0.70),
    ("junk", 0.0, 0.65), ("trash", 0.0, 0.65), ("regret", 0.0, 0.65),
    ("waste", 0.0, 0.60), ("fail", 0.0, 0.60), ("failure", 0.0, 0.65),
    ("crashes", 0.0, 0.60), ("die", 0.0, 0.50), ("pain", 0.0, 0.50),
    ("painful", 0.0, 0.60), ("terribly", 0.0, 0.60), ("horribly", 0.0, 0.65),
    ("poorly", 0.0, 0.55), ("badly", 0.0, 0.50), ("sadly", 0.0, 0.50),
    ("unfortunately", 0.0, 0.50), ("sad", 0.0, 0.50), ("mess", 0.0, 0.50),
    ("complain", 0.0, 0.50), ("complaint", 0.0, 0.50), ("struggle", 0.0, 0.50),
    # moderate negative
    ("mediocre", 0.0, 0.50), ("subpar", 0.0, 0.55), ("inferior", 0.0, 0.55),
    ("worse", 0.0, 0.60), ("slow", 0.0, 0.50), ("sluggish", 0.0, 0.60),
    ("laggy", 0.0, 0.55), ("unresponsive", 0.0, 0.60), ("choppy", 0.0, 0.50),
    ("glitchy", 0.0, 0.60), ("buggy", 0.0, 0.60), ("unstable", 0.0, 0.55),
    ("unreliable", 0.0, 0.60), ("cracked", 0.0, 0.55), ("scratched", 0.0, 0.45),
    ("dented", 0.0, 0.40), ("fragile", 0.0, 0.45), ("brittle", 0.0, 0.45),
    ("weak", 0.0, 0.45), ("loose", 0.0, 0.35), ("wobbly", 0.0, 0.45),
    ("shaky", 0.0, 0.40), ("noisy", 0.0, 0.50), ("loud", 0.0, 0.40),
    ("overheated", 0.0, 0.55), ("bulky", 0.0, 0.40), ("clunky", 0.0, 0.45),
    ("awkward", 0.0, 0.40), ("uncomfortable", 0.0, 0.50), ("confusing", 0.0, 0.50),
    ("unclear", 0.0, 0.40), ("wrong", 0.0, 0.50), ("incorrect", 0.0, 0.45),
    ("missing", 0.0, 0.45), ("incomplete", 0.0, 0.40), ("insufficient", 0.0, 0.45),
    ("inadequate", 0.0, 0.50), ("expensive", 0.0, 0.40), ("pricey", 0.0, 0.40),
    ("costly", 0.0, 0.40), ("dull", 0.0, 0.45), ("dim", 0.0, 0.40),
    ("blurry", 0.0, 0.50), ("fuzzy", 0.0, 0.40), ("grainy", 0.0, 0.45),
    ("faded", 0.0, 0.35), ("problem", 0.0, 0.50), ("issue", 0.0, 0.40),
    ("trouble", 0.0, 0.50), ("error", 0.0, 0.45), ("bug", 0.0, 0.40),
    ("glitch", 0.0, 0.45), ("defect", 0.0, 0.60), ("flaw", 0.0, 0.45),
    ("fault", 0.0, 0.45), ("damage", 0.0, 0.50), ("scratch", 0.0, 0.35),
    ("crack", 0.0, 0.45), ("dent", 0.0, 0.30), ("noise", 0.0, 0.35),
    ("drawback", 0.0, 0.45), ("downside", 0.0, 0.40), ("disadvantage", 0.0, 0.40),
    ("lags", 0.0, 0.45), ("worry", 0.0, 0.45), ("bother", 0.0, 0.45),
    ("dislike", 0.0, 0.55), ("freezes", 0.0, 0.45), ("sadness", 0.0, 0.55),
    # weak negative
    ("difficult", 0.0, 0.40), ("hard", 0.0, 0.30), ("complicated", 0.0, 0.40),
    ("heavy", 0.0, 0.30), ("hot", 0.0, 0.35), ("stiff", 0.0, 0.30),
    ("con", 0.0, 0.30), ("slowly", 0.0, 0.30), ("barely", 0.0, 0.30),
    ("hardly", 0.0, 0.30),
]

# ---------------------------------------------------------------------------
# embedding space design
# ---------------------------------------------------------------------------

CORE_GROUPS = {
    "display": ["screen", "display", "resolution", "monitor", "touchscreen",
                "brightness", "pixel", "graphics"],
    "sizing": ["size"],
    "battery": ["battery", "life", "power", "charge", "charger"],
    "price": ["price", "cost", "value", "money", "dollar", "deal", "budget"],
    "perf": ["processor", "cpu", "speed", "performance", "memory", "ram",
             "ssd", "storage"],
    "input": ["keyboard", "key", "trackpad", "touchpad", "button"],
    "general": ["laptop", "computer", "machine", "product", "device", "quality"],
    "service": ["warranty", "shipping", "delivery", "support", "seller", "service"],
}

INTRA_GROUP = 0.60
CROSS_GROUP = 0.05
GENERAL_LINK = 0.15

PAIR_OVERRIDES = {
    ("screen", "display"): 0.65,
    ("screen", "resolution"): 0.62,
    ("screen", "monitor"): 0.64,
    ("display", "monitor"): 0.64,
    ("screen", "size"): 0.45,
    ("display", "size"): 0.40,
    ("resolution", "size"): 0.20,
    ("battery", "life"): 0.50,
    ("life", "power"): 0.30,
    ("life", "charge"): 0.30,
    ("life", "charger"): 0.30,
    ("memory", "ram"): 0.75,
    ("processor", "cpu"): 0.78,
    ("speed", "performance"): 0.65,
    ("keyboard", "key"): 0.72,
    ("price", "cost"): 0.72,
    ("price", "value"): 0.62,
}

# word placed near an anchor with the given cosine
SATELLITES = [
    ("panel", "display", 0.55), ("lcd", "display", 0.55), ("bezel", "screen", 0.50),
    ("backlight", "screen", 0.50), ("glare", "screen", 0.50), ("color", "display", 0.45),
    ("hd", "resolution", 0.50), ("contrast", "display", 0.50),
    ("clarity", "resolution", 0.50), ("sharpness", "resolution", 0.50),
    ("adapter", "charger", 0.55), ("cord", "charger", 0.50), ("outlet", "charger", 0.45),
    ("plug", "charger", 0.50), ("lifespan", "life", 0.60), ("runtime", "life", 0.55),
    ("discount", "deal", 0.60), ("sale", "deal", 0.60), ("bargain", "deal", 0.60),
    ("coupon", "deal", 0.55), ("refund", "money", 0.40), ("cent", "money", 0.50),
    ("chip", "processor", 0.60), ("core", "cpu", 0.55), ("gigabyte", "memory", 0.50),
    ("benchmark", "performance", 0.55), ("gaming", "performance", 0.50),
    ("game", "performance", 0.45), ("boot", "speed", 0.50), ("startup", "speed", 0.50),
    ("lag", "speed", 0.45), ("mouse", "trackpad", 0.55), ("stylus", "key", 0.40),
    ("pen", "key", 0.40), ("notebook", "laptop", 0.65), ("desktop", "computer", 0.60),
    ("tablet", "laptop", 0.50), ("item", "product", 0.60), ("unit", "product", 0.55),
    ("model", "product", 0.50), ("gadget", "device", 0.60), ("brand", "product", 0.45),
    ("electronics", "device", 0.50), ("package", "shipping", 0.55),
    ("box", "shipping", 0.50), ("return", "service", 0.45),
    ("replacement", "service", 0.50), ("guarantee", "warranty", 0.65),
    ("vendor", "seller", 0.60), ("store", "seller", 0.50), ("shop", "seller", 0.50),
    ("order", "shipping", 0.45),
]

POSITIVE_FAMILY = """
good great nice excellent amazing awesome fantastic wonderful perfect beautiful solid
sturdy fast quick speedy smooth crisp sharp vivid bright vibrant clear quiet
comfortable easy simple convenient affordable happy pleased satisfied love enjoy
recommend worth fine decent reliable durable impressive gorgeous stunning superb
outstanding brilliant delightful pleasant elegant stylish responsive efficient
powerful lovely
""".split()

NEGATIVE_FAMILY = """
bad terrible horrible awful poor worst slow sluggish laggy noisy loud heavy bulky
flimsy weak dull dim blurry fuzzy broken defective faulty disappointing disappointed
hate regret waste problem issue trouble error crash fail useless worthless cheap
cracked scratched dead annoying frustrating mediocre grainy wobbly clunky
uncomfortable confusing overpriced expensive pricey
""".split()

FAMILY_COS = 0.55  # word-to-family-anchor target

# extra surface forms that get their own vector near the base word
VARIANT_SUFFIX_NOISE = 0.22


def build_tag_lexicon() -> dict[str, str]:
    lexicon: dict[str, str] = {}
    conflicts: list[str] = []

    def put(word: str, tag: str) -> None:
        if word in lexicon:
            if lexicon[word] != tag:
                conflicts.append(f"{word}: kept {lexicon[word]}, skipped {tag}")
            return
        lexicon[word] = tag

    for w in ADVERBS:
        put(w, "ADV")
    for w in ADJECTIVES:
        put(w, "ADJ")
    for group in VERB_GROUPS:
        for form in group:
            put(form, "VERB")
    for w in NOUNS:
        put(w, "NOUN")
        put(pluralize(w), "NOUN")
    if conflicts:
        print(f"tag lexicon: {len(conflicts)} cross-list conflicts (first wins)")
        for c in conflicts:
            print(f"  {c}")
    return lexicon


def pluralize(noun: str) -> str:
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and len(noun) > 2 and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    return noun + "s"


def build_sentiment(tag_lexicon: dict[str, str]) -> dict[str, tuple[float, float]]:
    # local import so the package under src/ is found when run from the repo root
    sys.path.insert(0, str(ROOT / "src"))
    from seopinion.nlp.tagging import light_lemma

    verb_forms = {g[0]: g for g in VERB_GROUPS}
    raw: list[tuple[str, float, float]] = []
    for word, pos, neg in SENTIMENT:
        raw.append((word, pos, neg))
        for form in verb_forms.get(word, ()):
            raw.append((form, pos, neg))
        if tag_lexicon.get(word) == "NOUN":
            raw.append((pluralize(word), pos, neg))

    merged: dict[str, tuple[float, float]] = {}
    for word, pos, neg in raw:
        for key in {word, light_lemma(word, known=tag_lexicon)}:
            old = merged.get(key, (0.0, 0.0))
            merged[key] = (max(old[0], pos), max(old[1], neg))
    return merged


def factor_gram(words: list[str], gram: np.ndarray, dim: int) -> dict[str, np.ndarray]:
    """Exact (up to PSD clipping) vectors realizing the target Gram matrix."""
    eigvals, eigvecs = np.linalg.eigh(gram)
    eigvals = np.clip(eigvals, 0.0, None)
    basis = eigvecs * np.sqrt(eigvals)
    out: dict[str, np.ndarray] = {}
    for i, word in enumerate(words):
        vec = np.zeros(dim)
        vec[: len(words)] = basis[i]
        norm = np.linalg.norm(vec)
        out[word] = vec / norm if norm > 0 else vec
    return out


def place_near(anchor: np.ndarray, target_cos: float, rng: np.random.Generator) -> np.ndarray:
    """Unit vector with the given cosine to `anchor` (random residual direction)."""
    noise = rng.standard_normal(anchor.shape[0])
    noise -= anchor * (noise @ anchor) / (anchor @ anchor)
    noise /= np.linalg.norm(noise)
    vec = target_cos * anchor / np.linalg.norm(anchor) + np.sqrt(1 - target_cos**2) * noise
    return vec / np.linalg.norm(vec)


def build_embeddings(tag_lexicon: dict[str, str]) -> dict[str, np.ndarray]:
    rng = np.random.default_rng(SEED)
    vectors: dict[str, np.ndarray] = {}

    core_words: list[str] = []
    word_group: dict[str, str] = {}
    for group, words in CORE_GROUPS.items():
        for w in words:
            core_words.append(w)
            word_group[w] = group
    n = len(core_words)
    gram = np.full((n, n), CROSS_GROUP)
    for i, wi in enumerate(core_words):
        for j, wj in enumerate(core_words):
            if i == j:
                gram[i, j] = 1.0
                continue
            gi, gj = word_group[wi], word_group[wj]
            if gi == gj:
                gram[i, j] = INTRA_GROUP
            elif "general" in (gi, gj):
                gram[i, j] = GENERAL_LINK
            key = (wi, wj) if (wi, wj) in PAIR_OVERRIDES else (wj, wi)
            if key in PAIR_OVERRIDES:
                gram[i, j] = PAIR_OVERRIDES[key]
    vectors.update(factor_gram(core_words, gram, DIM))

    for word, anchor, target in SATELLITES:
        if word not in vectors:
            vectors[word] = place_near(vectors[anchor], target, rng)

    pos_anchor = place_near(rng.standard_normal(DIM), 1.0, rng)
    neg_anchor = place_near(pos_anchor, -0.30, rng)
    for word in POSITIVE_FAMILY:
        if word not in vectors:
            vectors[word] = place_near(pos_anchor, FAMILY_COS, rng)
    for word in NEGATIVE_FAMILY:
        if word not in vectors:
            vectors[word] = place_near(neg_anchor, FAMILY_COS, rng)

    # guard: anything placed so far must stay clearly below the mapping
    # threshold against unrelated core words
    protected = {w: v for w, v in vectors.items()}

    def far_enough(vec: np.ndarray) -> bool:
        return all(abs(float(vec @ v)) < 0.50 for v in protected.values())

    fillers = [w for w in tag_lexicon if w not in vectors]
    for word in sorted(fillers):
        for _ in range(200):
            cand = rng.standard_normal(DIM)
            cand /= np.linalg.norm(cand)
            if far_enough(cand):
                vectors[word] = cand
                break
        else:
            raise RuntimeError(f"could not place filler vector for {word!r}")

    # morphological variants of domain words stay close to their base form
    for word in list(protected):
        if tag_lexicon.get(word) == "NOUN":
            variant = pluralize(word)
            if variant not in vectors:
                vectors[variant] = place_near(
                    vectors[word], 1.0 - VARIANT_SUFFIX_NOISE / 2, rng
                )
    return vectors


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)

    tag_lexicon = build_tag_lexicon()
    lines = [f"{w}\t{t}" for w, t in sorted(tag_lexicon.items())]
    (DATA / "tag_lexicon.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"tag_lexicon.tsv: {len(lines)} entries")

    sentiment = build_sentiment(tag_lexicon)
    lines = [f"{w}\t{p:.2f}\t{n:.2f}" for w, (p, n) in sorted(sentiment.items())]
    (DATA / "sentiment_lexicon.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"sentiment_lexicon.tsv: {len(lines)} entries")

    vectors = build_embeddings(tag_lexicon)
    out = []
    for word in sorted(vectors):
        comps = " ".join(f"{x:.4f}" for x in vectors[word])
        out.append(f"{word} {comps}")
    (DATA / "embeddings_50d.txt").write_text("\n".join(out) + "\n", encoding="utf-8")
    print(f"embeddings_50d.txt: {len(out)} vectors, dim {DIM}")


if __name__ == "__main__":
    main()
