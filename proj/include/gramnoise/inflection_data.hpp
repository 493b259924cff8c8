// Copyright 2026 The gramnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Embedded copy of data/inflections.tsv so the library works without a
// file lookup. A test pins this literal to the committed file; edit the
// file and mirror the change here.

#ifndef GRAMNOISE_INFLECTION_DATA_HPP
#define GRAMNOISE_INFLECTION_DATA_HPP

namespace gramnoise {

inline constexpr const char* kBuiltinInflectionsTsv = R"TSV(# gramnoise inflection lexicon
# form1<TAB>form2<TAB>kind
# kinds: noun  (singular -> plural, both directions)
#        verb  (base/not-3SG -> 3SG, both directions)
#        invariant (noun identical in singular and plural)
#        article (word -> the indefinite article it takes)
child	children	noun
man	men	noun
woman	women	noun
person	people	noun
foot	feet	noun
tooth	teeth	noun
goose	geese	noun
mouse	mice	noun
louse	lice	noun
ox	oxen	noun
criterion	criteria	noun
phenomenon	phenomena	noun
analysis	analyses	noun
basis	bases	noun
crisis	crises	noun
thesis	theses	noun
hypothesis	hypotheses	noun
diagnosis	diagnoses	noun
emphasis	emphases	noun
oasis	oases	noun
axis	axes	noun
parenthesis	parentheses	noun
synthesis	syntheses	noun
synopsis	synopses	noun
datum	data	noun
medium	media	noun
curriculum	curricula	noun
bacterium	bacteria	noun
memorandum	memoranda	noun
stratum	strata	noun
index	indices	noun
appendix	appendices	noun
matrix	matrices	noun
vertex	vertices	noun
cactus	cacti	noun
fungus	fungi	noun
nucleus	nuclei	noun
radius	radii	noun
stimulus	stimuli	noun
syllabus	syllabi	noun
alumnus	alumni	noun
corpus	corpora	noun
genus	genera	noun
wife	wives	noun
knife	knives	noun
life	lives	noun
wolf	wolves	noun
shelf	shelves	noun
leaf	leaves	noun
loaf	loaves	noun
thief	thieves	noun
calf	calves	noun
half	halves	noun
self	selves	noun
elf	elves	noun
scarf	scarves	noun
hoof	hooves	noun
potato	potatoes	noun
tomato	tomatoes	noun
hero	heroes	noun
echo	echoes	noun
veto	vetoes	noun
torpedo	torpedoes	noun
mosquito	mosquitoes	noun
cargo	cargoes	noun
photo	photos	noun
piano	pianos	noun
memo	memos	noun
logo	logos	noun
kilo	kilos	noun
solo	solos	noun
auto	autos	noun
typo	typos	noun
intro	intros	noun
demo	demos	noun
euro	euros	noun
avocado	avocados	noun
casino	casinos	noun
bus	buses	noun
gas	gases	noun
lens	lenses	noun
virus	viruses	noun
bonus	bonuses	noun
campus	campuses	noun
census	censuses	noun
circus	circuses	noun
status	statuses	noun
surplus	surpluses	noun
quiz	quizzes	noun
movie	movies	noun
cookie	cookies	noun
calorie	calories	noun
rookie	rookies	noun
ache	aches	noun
niche	niches	noun
shoe	shoes	noun
toe	toes	noun
canoe	canoes	noun
policeman	policemen	noun
businessman	businessmen	noun
gentleman	gentlemen	noun
spokesman	spokesmen	noun
chairman	chairmen	noun
fisherman	fishermen	noun
salesman	salesmen	noun
congressman	congressmen	noun
craftsman	craftsmen	noun
freshman	freshmen	noun
sheep	sheep	invariant
fish	fish	invariant
deer	deer	invariant
moose	moose	invariant
series	series	invariant
species	species	invariant
aircraft	aircraft	invariant
spacecraft	spacecraft	invariant
salmon	salmon	invariant
trout	trout	invariant
bison	bison	invariant
swine	swine	invariant
offspring	offspring	invariant
headquarters	headquarters	invariant
means	means	invariant
news	news	invariant
politics	politics	invariant
mathematics	mathematics	invariant
economics	economics	invariant
physics	physics	invariant
athletics	athletics	invariant
gymnastics	gymnastics	invariant
clothes	clothes	invariant
police	police	invariant
cattle	cattle	invariant
scissors	scissors	invariant
trousers	trousers	invariant
premises	premises	invariant
crossroads	crossroads	invariant
barracks	barracks	invariant
corps	corps	invariant
chassis	chassis	invariant
debris	debris	invariant
billiards	billiards	invariant
measles	measles	invariant
diabetes	diabetes	invariant
rabies	rabies	invariant
are	is	verb
am	is	verb
have	has	verb
do	does	verb
ache	aches	verb
quiz	quizzes	verb
canoe	canoes	verb
tiptoe	tiptoes	verb
hour	an	article
hours	an	article
hourly	an	article
honest	an	article
honestly	an	article
honesty	an	article
honor	an	article
honors	an	article
honour	an	article
honours	an	article
honorable	an	article
honourable	an	article
honorary	an	article
heir	an	article
heirs	an	article
heiress	an	article
x-ray	an	article
university	a	article
universities	a	article
union	a	article
unions	a	article
unique	a	article
unit	a	article
units	a	article
united	a	article
unity	a	article
universal	a	article
universe	a	article
uniform	a	article
uniforms	a	article
unilateral	a	article
unanimous	a	article
unicorn	a	article
unicorns	a	article
utensil	a	article
utility	a	article
utilities	a	article
euro	a	article
euros	a	article
europe	a	article
european	a	article
europeans	a	article
eulogy	a	article
eucalyptus	a	article
eu	a	article
one	a	article
once	a	article
one-time	a	article
user	a	article
users	a	article
use	a	article
used	a	article
useful	a	article
useless	a	article
usual	a	article
usually	a	article
usage	a	article
u-turn	a	article
ufo	a	article
ufos	a	article
uk	a	article
ukulele	a	article
uranium	a	article
)TSV";

}  // namespace gramnoise

#endif  // GRAMNOISE_INFLECTION_DATA_HPP
