#!/usr/bin/env python3
# Copyright 2026 The lectureqg Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates data/lexicon.tsv from the base word lists below.

Each output line is `word<TAB>tag[|alt...]`; the first tag is the default and
alternates are used by the tagger's context rules. Run from the repo root:

    python3 tools/make_lexicon.py > data/lexicon.tsv
"""
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

CLOSED = {
    "DT": "the a an this these those each every some any no all both either neither another "
          "its their his our your my whose such",
    "PRP": "i you he she it we they me him her us them myself yourself himself herself itself "
           "ourselves themselves one someone something anyone anything everyone everything nothing",
    "IN": "of in on at by for with from to about into onto through during before after above below "
          "between under over since until within without across against along among around behind "
          "beyond despite like near per than toward towards upon via whereas because although though "
          "if whether unless as that throughout beside besides inside outside except",
    "MD": "can could may might must shall should will would",
    "AUX": "am is are was were do does did",
    "CD": "zero one two three four five six seven eight nine ten eleven twelve thirteen fourteen "
          "fifteen sixteen seventeen eighteen nineteen twenty thirty forty fifty sixty seventy "
          "eighty ninety hundred thousand million billion dozen",
    "RB": "not never also very often always usually sometimes only just still even already then thus "
          "therefore however hence here now again quite rather too almost perhaps maybe instead "
          "together away back ever indeed later soon once twice finally fairly nearly roughly "
          "exactly simply mostly mainly largely typically generally basically essentially actually "
          "really certainly clearly directly easily quickly slowly rapidly gradually eventually "
          "recently currently previously initially originally relatively approximately",
    "OTHER": "and or but nor yet so what who when where why how which whom there",
}

SPECIAL = {
    "be": "VB", "been": "VBN", "being": "VBG",
    "have": "VBP|VB|AUX", "has": "VBZ|AUX", "had": "VBD|AUX|VBN",
    "having": "VBG", "born": "VBN",
}

NOUNS = """
ability abstraction accuracy account acid action activation activity adam addition address adjustment
advantage age agent air algorithm alpha amount analysis angle animal answer api apple application
approach approximation architecture area argument array arrow art article aspect assessment assignment
assumption atom attack attention attribute audience audio author autoencoder average axis
background backpropagation bag balance ball banana band bank base baseline basis batch bayes behavior
belief benchmark benefit bias bill bit block board body bond book boost boundary box brain branch
bread bridge bucket budget buffer bug building business byte
cache calculation calculus camera campus candidate capacity capital car card care career case cat
category cause cell center centroid chain chair chance change channel chapter character chart check
chemistry chicken child choice circle city claim class classification classifier clause client clock
cluster clustering code coefficient collection color column combination command comment committee
community company comparison competition compiler complexity component composition computation computer
concept conclusion condition confidence configuration connection consequence constant constraint
content context contrast contribution control convergence convolution copy core corner corpus
correlation cost count country couple course coverage cross curve customer cycle
data database dataset date day deal death decade decision decoder default definition degree delay
demand density department dependency depth derivative descent description design detail detection
detector development device diagram dictionary difference dimension direction discussion disease
distance distribution document dog dollar domain door doubt draft dropout duration
earth economy edge education effect efficiency effort eigenvalue eigenvector element embedding emphasis
employee encoder end energy engine entity entropy entry environment epoch equation error estimate
estimation estimator evaluation event evidence example exam exception exercise experience experiment
expert explanation exponent expression extension extent
face fact factor failure family feature feedback field figure file filter finance fire firm fit
flag floor flow focus food force forest form format formula foundation fraction frame framework
frequency friend front function future
gain game gap gate generalization generation gradient grammar graph grid ground group growth guess
guide
half hand hardware head health heap height help heuristic history hole home hope horse hour house
hypothesis
idea identity image impact implementation importance improvement incentive index individual industry
inference information input insight instance instruction integer integral intelligence intercept
interest interface internet interpretation interval intuition investment issue item iteration
job journal judgment
kernel key kind knowledge
label lab labor lack language laptop layer leader learner learning lecture length lesson letter level
library life light likelihood limit line link list literature load location logic loop loss lot
machine magnitude majority manager map margin market mass master material math mathematics matrix
matter maximum mean meaning measure measurement mechanism media median medicine member memory message
method metric middle mind minimum minute mistake mode model moment momentum money month morning
motion mouse movement music
name nation nature need neighbor network neuron news node noise norm notation note notebook notion
number
object objective observation occasion office offset operation operator opinion opportunity optimization
optimizer option order organization origin outcome outlier output overfitting owner
page pair paper paragraph parameter parent part partition party passage path pattern payment peak
penalty people percentage performance period person perspective phase phenomenon phone photo physics
picture piece pipeline pixel place plan plane planet plant plot point policy polynomial pool
population portion position possibility post potential power practice precision prediction preference
presence pressure price principle prior priority probability problem procedure process processor
product professor profit program programming progress project projection proof property proportion
proposal protocol prototype purpose
quality quantity query question queue quiz
radium radius rain random range rank rate ratio reaction reader reading reality reason reasoning
recall record recurrence reduction reference region regression regularization relation relationship
release report representation request requirement research researcher resolution resource response
rest result return reward risk road robot role room root round route row rule
salary sample sampling scale scenario schedule schema school science scientist score screen script
search season second section sector security segment selection sense sentence sequence series server
service session set setting shape share shift side sigmoid sign signal significance similarity
simulation site situation size skill slide slope snapshot society software solution source space
speaker speech speed spirit square stack stage standard star start state statement statistic
statistics status step stock storage store story strategy stream street strength structure student
study style subject subset success sum summary supervision supply support surface survey symbol
system
table tail tangent target task teacher team technique technology temperature tensor term test text
theorem theory thing threshold time title token tool top topic total trade tradeoff training
transcript transformation transformer transition tree trend trial truth tuple turn type
uncertainty understanding unit universe university update usage use user
validation value variable variance variation vector velocity version video view vision visualization
vocabulary volume
water wave way weakness weight week whole width window word work worker world
year
""".split()

# uncountable or irregular plurals
PLURAL_OVERRIDES = {
    "analysis": "analyses", "hypothesis": "hypotheses", "axis": "axes", "basis": "bases",
    "matrix": "matrices", "index": "indices", "vertex": "vertices", "criterion": "criteria",
    "phenomenon": "phenomena", "datum": "data", "child": "children", "person": "people",
    "mouse": "mice", "leaf": "leaves", "half": "halves", "life": "lives", "shelf": "shelves",
}
NO_PLURAL = set("""data information knowledge evidence software hardware research feedback advice
mathematics physics statistics economics news music water air money people media radium chemistry
backpropagation dropout overfitting momentum supervision intelligence calculus literature labor
health energy""".split())

VERBS = """
accept access accomplish achieve acquire act adapt add address adjust adopt affect aggregate aim
allocate allow alter analyze annotate answer appear append apply approach approximate argue arrange
ask assess assign assist associate assume attach attempt attend augment avoid
balance base begin believe belong benefit bound break build
calculate call capture care carry categorize cause center change check choose claim clarify classify
clean clip close cluster collect combine compare compile complete compose compress compute concatenate
concern conclude conduct confirm connect consider consist construct contain continue contribute
control converge convert convey copy correct correspond count cover create cross
debug decide declare decode decompose decrease define delete deliver demonstrate denote depend deploy
derive describe design detect determine develop differ differentiate diminish discard discover
discuss display distinguish distribute divide document double download draw drop
earn emerge emphasize employ enable encode encounter encourage end enhance ensure enter equal establish
estimate evaluate examine exceed exist expand expect experiment explain explode exploit explore
express extend extract
fail fall feed fill filter find finish fit fix flatten flip focus follow force forget form formulate
freeze
gather generalize generate get give go govern grade group grow guarantee guess guide
handle happen help hide highlight hold
identify ignore illustrate implement imply improve include incorporate increase indicate infer
influence inform initialize insert inspect install integrate interact interpret introduce invent
invert investigate involve iterate
join judge jump justify
keep know
label lack lead learn leave let lie limit link list load locate look lose lower
maintain make manage map match maximize mean measure meet memorize merge minimize miss mix model
modify monitor motivate move multiply
name need normalize note notice
observe obtain occur offer omit open operate optimize order organize outperform overcome overfit
own
pad parse partition pass pay perform permit pick place plan play plot point pool pose possess post
predict prefer prepare present preserve prevent print proceed process produce program project
promote propagate propose prove provide publish pull push put
quantify query
raise randomize rank reach read realize recall receive recognize recommend reconstruct record
recover reduce refer refine reflect regard regularize reject relate release rely remain remember
remove render repeat replace report represent reproduce require rescale research resemble reshape
resize resolve respond rest restrict result retain retrieve return reveal review reward rotate
round run
sample satisfy save say scale scan schedule score search see seek segment select send separate
serve set shape share shift show shrink shuffle sign signify simplify simulate sit sketch skip slide
slow smooth solve sort specify speed split square stack stand start state stay step stop store
stretch study submit subtract succeed suffer suggest sum summarize supervise supply support suppose
surpass switch
take talk teach tell tend test think threshold tokenize track train transfer transform translate
transpose travel treat trigger try tune turn type
understand undergo unfold update upload use utilize
validate vanish vary verify view visit visualize
wait walk want warn watch weigh weight win wonder work worry write
yield
""".split()

# noun/verb words whose default reading is the noun
NOUN_FIRST = set("""answer approach balance base benefit bound break care cause center change check
claim cluster control copy cost count cover design document double drop end equal estimate experiment
fall fit focus form grade group guess guide help hold influence jump label lack lead limit link list
load look map match mean measure mix model name need note order pad partition pass pay place plan
play plot point pool post process program project query rank record release report research rest
result return review reward round run sample scale schedule score search segment set shape share
shift sign slide square stack stand start state step stop store study sum supply support switch
talk test threshold track transfer transform travel trigger try turn type update use view visit walk
wait watch weight work worry yield""".split())

ADJECTIVES = """
able absolute abstract first third fourth fifth academic accurate active actual additional adequate adversarial affine aware
bad basic bayesian beautiful best better big binary blue brief broad
careful categorical central certain cheap clean clear close common compact comparable complete complex
computational concrete conditional consistent constant continuous convex correct costly critical
crucial current
dark deep dense dependent deterministic different difficult digital dimensional direct discrete
distinct diverse dynamic
early easy effective efficient empirical empty entire equal equivalent essential exact excellent
exponential external extra
false familiar famous fast final fine finite flat formal free frequent full fundamental further
gaussian general global good great green
hard heavy hidden hierarchical high historical huge human
ideal identical important impossible independent individual infinite initial inner intelligent
interesting internal intrinsic inverse
joint
key known
large last late latent lazy lexical linear little local logical long low
main major many marginal maximal mean medium minimal minor mobile modern multiple mutual
narrow natural necessary negative neural new next noisy nonlinear normal novel numerical
objective obvious old online open optimal orthogonal other outer overall
parallel partial particular past perfect physical popular positive possible powerful practical
precise previous primary prime principal prior private probabilistic proper public pure
quadratic qualitative quantitative quick
random rapid rare raw real reasonable recent recurrent red regular relative relevant reliable
remote residual responsible rich right robust rough
same scalar second secure semantic sensitive separate sequential serious several shallow sharp
short significant similar simple single slow small smooth social soft sparse spatial special
specific stable standard static statistical steep stochastic straight strict strong structural
successful sufficient suitable supervised symmetric synthetic
technical temporal terrible theoretical thin tiny top total traditional true typical
unique universal unknown unsupervised unusual upper useful usual
valid various vast visual
weak whole wide worse worst wrong
young
""".split()

IRREGULAR_FILE = ROOT / "data" / "irregular_verbs.tsv"


def plural(n):
    if n in PLURAL_OVERRIDES:
        return PLURAL_OVERRIDES[n]
    if n.endswith(("s", "x", "z", "ch", "sh")):
        return n + "es"
    if n.endswith("y") and n[-2] not in "aeiou":
        return n[:-1] + "ies"
    return n + "s"


def third_person(v):
    if v.endswith(("s", "x", "z", "ch", "sh", "o")):
        return v + "es"
    if v.endswith("y") and v[-2] not in "aeiou":
        return v[:-1] + "ies"
    return v + "s"


DOUBLE_FINAL = set("""drop fit plan pad skip stop step submit ship slip split run set put get
begin commit control cut dig hit jump let sit swim win admit occur prefer refer emit omit permit
""".split()) - {"jump"}


def past(v):
    if v.endswith("e"):
        return v + "d"
    if v.endswith("y") and v[-2] not in "aeiou":
        return v[:-1] + "ied"
    if v in DOUBLE_FINAL:
        return v + v[-1] + "ed"
    return v + "ed"


def gerund(v):
    if v.endswith("ie"):
        return v[:-2] + "ying"
    if v.endswith("e") and not v.endswith(("ee", "ye", "oe")):
        return v[:-1] + "ing"
    if v in DOUBLE_FINAL:
        return v + v[-1] + "ing"
    return v + "ing"


def main():
    entries = {}

    def put(word, tags):
        if word not in entries:
            entries[word] = []
        for t in tags:
            if t not in entries[word]:
                entries[word].append(t)

    for tag, words in CLOSED.items():
        for w in words.split():
            put(w, [tag])
    for w, tags in SPECIAL.items():
        put(w, tags.split("|"))

    irregular = {}
    for line in IRREGULAR_FILE.read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        base, pst, part = line.split("\t")
        irregular[base] = (pst, part)

    for n in NOUNS:
        verb_too = n in VERBS
        if not verb_too:
            put(n, ["NN"])
        else:
            put(n, ["NN", "VB"] if n in NOUN_FIRST else ["VB", "NN"])
        if n not in NO_PLURAL:
            if not verb_too:
                put(plural(n), ["NNS"])
            else:
                put(plural(n), ["NNS", "VBZ"] if n in NOUN_FIRST else ["VBZ", "NNS"])

    for v in VERBS + [b for b in irregular if b not in VERBS]:
        if v in entries and v not in ("be", "have", "do"):
            if "VB" not in entries[v]:
                entries[v].append("VB")
        else:
            put(v, ["VB"])
        if v in ("be", "have", "do"):
            continue
        put(third_person(v), ["VBZ"])
        if v in irregular:
            pst, part = irregular[v]
            put(pst, ["VBD"] + (["VBN"] if part == pst else []))
            if part != pst:
                put(part, ["VBN"])
        else:
            put(past(v), ["VBD", "VBN"])
        put(gerund(v), ["VBG"])

    for a in ADJECTIVES:
        put(a, ["JJ"])
        if a.endswith("le") and a not in ("whole", "single"):
            put(a[:-1] + "y", ["RB"])
        elif a.endswith("ic"):
            put(a + "ally", ["RB"])
        elif a.endswith("y") and len(a) > 3:
            put(a[:-1] + "ily", ["RB"])
        elif not a.endswith(("ly", "ful", "ous")):
            put(a + "ly", ["RB"])
        elif a.endswith(("ful", "ous")):
            put(a + "ly", ["RB"])

    out = sys.stdout
    out.write("# word\ttag[|alternate...] -- generated by tools/make_lexicon.py\n")
    for w in sorted(entries):
        out.write(f"{w}\t{'|'.join(entries[w])}\n")


if __name__ == "__main__":
    main()
