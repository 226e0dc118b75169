#!/usr/bin/env python3
"""Regenerate src/discaudit/data/lang_profiles.json.

Trains character-trigram profiles for English and Dutch from the sentence
corpora embedded below, attaches stopword lists (shared surfaces are dropped
so the sets stay disjoint), and writes the versioned profile file the
detector ships with. Run from the repository root:

    python scripts/build_lang_profiles.py
"""

import json
import math
import re
from collections import Counter
from pathlib import Path

PROFILE_VERSION = "1.0.0"
TOP_TRIGRAMS = 4000

ENGLISH_SENTENCES = [
    "Today I want to share my favorite recipes for a busy week.",
    "We went for a long walk along the beach before sunset.",
    "The weather was amazing during our trip to the mountains.",
    "My new video is online now, I hope you all enjoy watching it.",
    "I finally finished reading that book everyone keeps talking about.",
    "Thank you so much for all the kind messages this week.",
    "Here is a quick look behind the scenes of yesterday's shoot.",
    "I can't believe how fast this year has gone by already.",
    "What do you think of the new layout I picked for the kitchen?",
    "This recipe only needs five ingredients and twenty minutes.",
    "We are packing our bags for a short weekend away.",
    "The gym was completely empty this morning, which felt great.",
    "I tried a different editing style for this vlog, let me know.",
    "My little brother joined me for today's cooking experiment.",
    "There is nothing better than fresh bread on a Sunday morning.",
    "I answered your most asked questions in the new episode.",
    "After three attempts the cake finally came out of the pan in one piece.",
    "The train was delayed again so I missed the first meeting.",
    "Autumn is definitely my favorite season for photography.",
    "I love how the light falls through the window in the afternoon.",
    "We visited the old castle on the hill and the view was stunning.",
    "Tomorrow I will show you everything I bought for the new apartment.",
    "A big thank you to everyone who came to the meetup yesterday.",
    "I have been working on this painting for almost a month now.",
    "The dog decided that my new shoes were a chew toy.",
    "Remember to drink enough water during these warm days.",
    "I am testing three budget cameras to see which one is worth it.",
    "The garden finally looks the way I imagined it in spring.",
    "Breakfast today was simple, just oats with banana and cinnamon.",
    "Our flight got cancelled, so we spent an extra night in the city.",
    "I reorganized my entire bookshelf by color and I love it.",
    "The concert last night was honestly one of the best I have seen.",
    "Here are five small habits that made my mornings calmer.",
    "I switched to an earlier sleep schedule and it changed everything.",
    "The kids built an enormous sandcastle that lasted all afternoon.",
    "My favorite coffee place introduced a new seasonal menu.",
    "It took two hours to untangle the fairy lights from last year.",
    "I am so proud of how far this little project has come.",
    "We planted tomatoes and herbs on the balcony this weekend.",
    "The museum had a special exhibition about old maps and travel.",
    "Let me walk you through my simple evening skincare routine.",
    "I found the perfect desk for the corner of the studio.",
    "The first snow of the year always makes the street so quiet.",
    "I compared the two phones side by side for a full week.",
    "Sunday is for slow mornings, long reads, and too much tea.",
    "The new neighbors brought us a plate of homemade cookies.",
    "I am learning to knit and my first scarf is almost done.",
    "The traffic was terrible, but the podcast made it bearable.",
    "We watched the sunrise from the top of the dune, totally worth it.",
    "Meal prepping on Sunday saves me so much time during the week.",
    "My plants survived the holiday thanks to a very kind neighbor.",
    "I repainted the hallway in a soft green and it feels brand new.",
    "The library in this town is hidden inside an old church.",
    "Swimming in the sea this early still takes some courage.",
    "I shared my full packing list for two weeks of travel.",
    "The recipe from my grandmother still beats every restaurant version.",
    "We cycled forty kilometers and rewarded ourselves with pancakes.",
    "The update finally fixed the battery issue on my laptop.",
    "I spent the whole evening sorting photos from the summer.",
    "A stranger complimented my jacket today and it made my week.",
    "The bakery on the corner sells out before nine in the morning.",
    "I am challenging myself to read twelve classics this year.",
    "Our team won the quiz night by a single point.",
    "The ferry ride across the lake takes about twenty minutes.",
    "I moved my desk next to the window for better light.",
    "These boots lasted through three winters and still look fine.",
    "The market was full of fresh strawberries this morning.",
    "I taught my grandmother how to send voice messages.",
    "The movie was slower than expected but the ending was worth it.",
    "We finally hung the shelves that waited in the garage for months.",
    "My running route passes three windmills and a tiny harbor.",
    "The soup needs one more hour, so the kitchen smells amazing.",
    "I keep a small notebook for ideas that arrive at midnight.",
    "The workshop taught us how to repair our own bikes.",
    "Rainy days are perfect for sorting the spice drawer.",
    "I surprised my sister with tickets for her favorite band.",
    "The new trail through the forest opens next weekend.",
    "I wrote down every expense for a month and learned a lot.",
    "Our cat has claimed the laundry basket as her new bed.",
    "The lecture about deep sea creatures was surprisingly funny.",
    "I finally framed the posters that leaned against the wall forever.",
    "The night train arrives early, so we have the whole day there.",
    "Fresh figs from the market turned a plain cake into a feast.",
    "I practice the piano for twenty minutes before breakfast.",
    "The second-hand store had exactly the lamp I was hunting for.",
    "We spent the afternoon kayaking between the small islands.",
    "My phone died right before the best view of the hike.",
    "The recipe calls for patience more than for skill.",
    "I finally understand why everyone loves this author.",
    "The balcony is tiny but it fits two chairs and a sunset.",
    "Their wedding was small, outdoors, and absolutely lovely.",
    "I swapped the morning scroll for ten pages of a book.",
    "The city looks completely different from the water.",
    "A thermos of tea makes every winter walk twice as long.",
    "The kids counted seventeen boats from the bridge.",
    "I labeled every box this time, future me will be grateful.",
    "The choir rehearsal ran late but nobody seemed to mind.",
    "Homemade pizza night is slowly becoming a family tradition.",
    "I watched the storm roll in from the safety of the porch.",
    "The article explains the history of our street name.",
    "My old camera still makes the nicest photos of all.",
    "We tried the new ramen place and queued for an hour.",
    "The tide pools were full of crabs and tiny silver fish.",
    "I cleaned the windows and suddenly the whole room is brighter.",
    "The marathon passes our door, so we hand out water cups.",
    "Her garden tour convinced me to buy three more plants.",
    "The quiet hours in the library are my favorite part of the week.",
    "I fixed the squeaky door with a single drop of oil.",
    "The map from the tourist office led us to a hidden courtyard.",
    "Every guest has to write a line in our kitchen notebook.",
    "The early market run rewards you with warm croissants.",
    "I archived a thousand old emails and feel strangely free.",
    "The bridge lights up blue for a few minutes after sunset.",
    "We agreed that the best souvenir is a local cookbook.",
    "My neighbor teaches me a new chess opening every Friday.",
    "The printer works again after a firm but loving restart.",
    "A heron stood motionless by the pond the entire morning.",
    "I saved the seeds from the best tomatoes for next year.",
    "The documentary about glaciers kept the whole room silent.",
    "Everyone overestimates week one and underestimates month one.",
    "The last bus was full, so we walked home under the stars.",
    "I finally learned how to fold a fitted sheet properly.",
    "The corner shop started stocking my favorite childhood sweets.",
    "Our book club argued about the ending for two hours.",
    "The heatwave turned the attic office into a sauna.",
    "I moved all my notes into one app and my head feels lighter.",
    "The ice on the canal was thick enough for the first skaters.",
    "A good playlist makes cleaning the house almost fun.",
    "The tailor fixed my coat while I waited with an espresso.",
    "We planted a small apple tree for the new baby.",
    "The power went out, so we played cards by candlelight.",
    "I tried making pasta from scratch and the kitchen survived.",
    "The viewpoint is a steep climb but the photos pay for it.",
    "My desk plant has produced its first new leaf in months.",
    "The fog lifted just as we reached the lighthouse.",
    "I keep the cinema tickets from every film in a jar.",
    "The recipe feeds four, or two if everyone is honest.",
    "Our street organized a swap market for toys and books.",
    "The first espresso from the new machine felt ceremonial.",
    "I wrote to the council about the broken streetlight and it works now.",
    "The swallows are back, so summer is officially close.",
    "A slow morning with the newspaper fixes most small worries.",
    "The hiking boots finally gave up after eight good years.",
    "I memorized the bus schedule and feel like a local now.",
    "The bakery experiment of the week is cardamom buns.",
    "We counted the stairs to the tower top, all two hundred twelve.",
]

DUTCH_SENTENCES = [
    "Vandaag deel ik mijn favoriete recepten voor een drukke week.",
    "We hebben gisteren een lange wandeling langs het strand gemaakt.",
    "Het weer was prachtig tijdens onze vakantie in de bergen.",
    "Mijn nieuwe video staat nu online, veel kijkplezier allemaal.",
    "Ik heb eindelijk dat boek uitgelezen waar iedereen het over heeft.",
    "Bedankt voor alle lieve berichten van de afgelopen week.",
    "Hier is een korte blik achter de schermen van de opnames.",
    "Ik kan niet geloven hoe snel dit jaar voorbij is gegaan.",
    "Wat vinden jullie van de nieuwe indeling van de keuken?",
    "Dit recept heeft maar vijf ingrediënten nodig en twintig minuten.",
    "We pakken onze tassen in voor een weekendje weg.",
    "De sportschool was vanochtend helemaal leeg, dat voelde heerlijk.",
    "Ik heb een andere montagestijl geprobeerd voor deze vlog.",
    "Mijn kleine broertje hielp vandaag mee met het kookexperiment.",
    "Er is niets beters dan vers brood op een zondagochtend.",
    "In de nieuwe aflevering beantwoord ik jullie meest gestelde vragen.",
    "Na drie pogingen kwam de taart eindelijk heel uit de vorm.",
    "De trein had weer vertraging dus ik miste de eerste vergadering.",
    "De herfst is echt mijn favoriete seizoen om te fotograferen.",
    "Ik hou van het licht dat in de middag door het raam valt.",
    "We bezochten het oude kasteel op de heuvel en het uitzicht was schitterend.",
    "Morgen laat ik alles zien wat ik voor het nieuwe huis heb gekocht.",
    "Een grote dankjewel aan iedereen die gisteren naar de meetup kwam.",
    "Ik werk nu al bijna een maand aan dit schilderij.",
    "De hond besloot dat mijn nieuwe schoenen speelgoed waren.",
    "Vergeet niet genoeg water te drinken op deze warme dagen.",
    "Ik test drie goedkope camera's om te zien welke de moeite waard is.",
    "De tuin ziet er eindelijk uit zoals ik het in het voorjaar bedacht had.",
    "Het ontbijt was vandaag simpel, gewoon havermout met banaan en kaneel.",
    "Onze vlucht werd geannuleerd, dus we bleven een nachtje extra in de stad.",
    "Ik heb mijn hele boekenkast op kleur gesorteerd en het staat geweldig.",
    "Het concert van gisteravond was echt een van de beste ooit.",
    "Hier zijn vijf kleine gewoontes die mijn ochtenden rustiger maakten.",
    "Ik ga nu eerder slapen en het verandert echt alles.",
    "De kinderen bouwden een enorm zandkasteel dat de hele middag bleef staan.",
    "Mijn favoriete koffietentje heeft een nieuw seizoensmenu.",
    "Het kostte twee uur om de kerstverlichting van vorig jaar te ontwarren.",
    "Ik ben zo trots op hoe ver dit kleine project is gekomen.",
    "We hebben dit weekend tomaten en kruiden op het balkon geplant.",
    "Het museum had een speciale tentoonstelling over oude kaarten en reizen.",
    "Ik neem jullie mee door mijn simpele avondroutine.",
    "Ik vond het perfecte bureau voor de hoek van de studio.",
    "De eerste sneeuw van het jaar maakt de straat altijd zo stil.",
    "Ik heb de twee telefoons een volle week naast elkaar vergeleken.",
    "Zondag is voor langzame ochtenden, lange boeken en te veel thee.",
    "De nieuwe buren brachten een bord zelfgebakken koekjes langs.",
    "Ik leer breien en mijn eerste sjaal is bijna klaar.",
    "Het verkeer was verschrikkelijk, maar de podcast maakte het draaglijk.",
    "We keken naar de zonsopkomst vanaf het duin, echt de moeite waard.",
    "Op zondag koken voor de hele week scheelt me zoveel tijd.",
    "Mijn planten hebben de vakantie overleefd dankzij een lieve buurvrouw.",
    "Ik heb de gang zachtgroen geverfd en het voelt als een nieuw huis.",
    "De bibliotheek in dit stadje zit verstopt in een oude kerk.",
    "Zo vroeg in zee zwemmen vraagt nog steeds wat moed.",
    "Ik heb mijn volledige paklijst gedeeld voor twee weken reizen.",
    "Het recept van mijn oma wint het nog steeds van elk restaurant.",
    "We fietsten veertig kilometer en beloonden onszelf met pannenkoeken.",
    "De update heeft eindelijk het batterijprobleem van mijn laptop opgelost.",
    "Ik ben de hele avond bezig geweest met foto's van de zomer sorteren.",
    "Een vreemde gaf me vandaag een compliment over mijn jas.",
    "De bakker op de hoek is voor negen uur al uitverkocht.",
    "Ik daag mezelf uit om dit jaar twaalf klassiekers te lezen.",
    "Ons team won de quizavond met één punt verschil.",
    "De pont over het meer duurt ongeveer twintig minuten.",
    "Ik heb mijn bureau naar het raam verplaatst voor beter licht.",
    "Deze laarzen gaan al drie winters mee en zien er nog prima uit.",
    "De markt lag vanochtend vol met verse aardbeien.",
    "Ik heb mijn oma geleerd hoe ze spraakberichten kan sturen.",
    "De film was trager dan verwacht maar het einde maakte alles goed.",
    "We hebben eindelijk de planken opgehangen die al maanden in de garage lagen.",
    "Mijn hardlooprondje komt langs drie molens en een kleine haven.",
    "De soep moet nog een uur, dus de keuken ruikt heerlijk.",
    "Ik bewaar een klein notitieboekje voor ideeën die om middernacht komen.",
    "In de workshop leerden we onze eigen fietsen repareren.",
    "Regenachtige dagen zijn perfect om het kruidenrek op te ruimen.",
    "Ik verraste mijn zus met kaartjes voor haar favoriete band.",
    "Het nieuwe wandelpad door het bos opent volgend weekend.",
    "Ik schreef een maand lang elke uitgave op en leerde er veel van.",
    "Onze kat heeft de wasmand uitgeroepen tot haar nieuwe bed.",
    "De lezing over diepzeedieren was verrassend grappig.",
    "Ik heb eindelijk de posters ingelijst die eeuwig tegen de muur stonden.",
    "De nachttrein komt vroeg aan, dus we hebben er de hele dag.",
    "Verse vijgen van de markt maakten van een gewone cake een feestje.",
    "Ik oefen elke ochtend twintig minuten piano voor het ontbijt.",
    "De kringloopwinkel had precies de lamp waar ik naar zocht.",
    "We hebben de middag gekajakt tussen de kleine eilandjes.",
    "Mijn telefoon ging uit vlak voor het mooiste uitzicht van de tocht.",
    "Dit recept vraagt meer geduld dan vaardigheid.",
    "Ik snap eindelijk waarom iedereen van deze schrijver houdt.",
    "Het balkon is klein maar er passen twee stoelen en een zonsondergang op.",
    "Hun bruiloft was klein, buiten, en werkelijk prachtig.",
    "Ik heb het ochtendscrollen ingeruild voor tien bladzijden lezen.",
    "De stad ziet er vanaf het water totaal anders uit.",
    "Een thermoskan thee maakt elke winterwandeling twee keer zo lang.",
    "De kinderen telden zeventien bootjes vanaf de brug.",
    "Ik heb deze keer elke doos gelabeld, daar ben ik straks blij mee.",
    "De koorrepetitie liep uit maar niemand vond het erg.",
    "Zelf pizza maken wordt langzaam een familietraditie.",
    "Ik keek naar de naderende storm vanaf de veilige veranda.",
    "Het artikel legt de geschiedenis van onze straatnaam uit.",
    "Mijn oude camera maakt nog steeds de mooiste foto's van allemaal.",
    "We probeerden de nieuwe ramenzaak en stonden een uur in de rij.",
    "De getijdenpoeltjes zaten vol krabben en kleine zilveren visjes.",
    "Ik heb de ramen gelapt en opeens is de hele kamer lichter.",
    "De marathon komt langs onze deur, dus wij delen bekertjes water uit.",
    "Haar rondleiding door de tuin overtuigde me om drie planten te kopen.",
    "De stille uurtjes in de bibliotheek zijn mijn favoriete moment van de week.",
    "Ik heb de piepende deur gemaakt met één druppel olie.",
    "De plattegrond van het toeristenbureau leidde ons naar een verborgen binnenplaats.",
    "Elke gast moet een regel schrijven in ons keukenschrift.",
    "Wie vroeg naar de markt gaat, wordt beloond met warme croissants.",
    "Ik heb duizend oude mailtjes gearchiveerd en voel me vreemd vrij.",
    "De brug kleurt na zonsondergang een paar minuten blauw.",
    "We waren het erover eens dat een kookboek het beste souvenir is.",
    "Mijn buurman leert me elke vrijdag een nieuwe schaakopening.",
    "De printer doet het weer na een stevige maar liefdevolle herstart.",
    "Een reiger stond de hele ochtend roerloos bij de vijver.",
    "Ik bewaar de zaadjes van de beste tomaten voor volgend jaar.",
    "De documentaire over gletsjers hield de hele kamer stil.",
    "Iedereen overschat week één en onderschat maand één.",
    "De laatste bus zat vol, dus we liepen onder de sterren naar huis.",
    "Ik heb eindelijk geleerd hoe je een hoeslaken netjes opvouwt.",
    "De buurtwinkel verkoopt nu de snoepjes uit mijn jeugd.",
    "Onze leesclub discussieerde twee uur over het einde.",
    "Door de hittegolf werd het zolderkantoor een sauna.",
    "Ik heb al mijn notities in één app gezet en mijn hoofd voelt lichter.",
    "Het ijs op de gracht was dik genoeg voor de eerste schaatsers.",
    "Een goede afspeellijst maakt het huis schoonmaken bijna leuk.",
    "De kleermaker maakte mijn jas terwijl ik wachtte met een espresso.",
    "We hebben een klein appelboompje geplant voor de nieuwe baby.",
    "De stroom viel uit, dus we speelden kaart bij kaarslicht.",
    "Ik probeerde zelf pasta te maken en de keuken heeft het overleefd.",
    "Het uitzichtpunt is een steile klim maar de foto's maken alles goed.",
    "Mijn bureauplant heeft na maanden eindelijk een nieuw blaadje.",
    "De mist trok op precies toen we de vuurtoren bereikten.",
    "Ik bewaar de bioscoopkaartjes van elke film in een pot.",
    "Het recept is voor vier personen, of voor twee als iedereen eerlijk is.",
    "Onze straat organiseerde een ruilmarkt voor speelgoed en boeken.",
    "De eerste espresso uit de nieuwe machine voelde plechtig.",
    "Ik schreef de gemeente over de kapotte lantaarnpaal en hij doet het weer.",
    "De zwaluwen zijn terug, dus de zomer is officieel dichtbij.",
    "Een rustige ochtend met de krant lost de meeste kleine zorgen op.",
    "De wandelschoenen hebben het na acht goede jaren opgegeven.",
    "Ik ken de busdienstregeling uit mijn hoofd en voel me een echte local.",
    "Het bakexperiment van deze week is kardemombroodjes.",
    "We telden de treden naar de top van de toren, tweehonderdtwaalf in totaal.",
]

# High-frequency function words. Surfaces occurring in both lists are
# removed from both so the shipped sets are disjoint.
ENGLISH_STOPWORDS = """
the and to of a i you it is in that for on with this my we they be are have
has was not but at from your all so out what when how now new more about just
like one can will time day today here there our his her them who why which
would could should than then some no yes do does did been if or as by an me
us him its their these those over again very really went going
""".split()

DUTCH_STOPWORDS = """
de het een en van ik je jij dat die te niet met voor zijn er maar ook aan
naar dan nog wat deze om bij uit heb hebben heeft had mijn jouw jullie wij ze
zij hij hem haar ons onze dit als op zo al toen nu hier daar wie waarom welke
zou kunnen kan zal moet moeten tijd dag vandaag morgen gisteren nieuwe meer
weer heel echt goed mooi leuk veel alle alles iets niets geen ja nee doen
doet deed geweest worden wordt werd is in was over
""".split()


def letter_words(text: str) -> list[str]:
    return re.findall(r"[^\W\d_]+", text.lower(), flags=re.UNICODE)


def trigram_counts(sentences) -> Counter:
    counts = Counter()
    for sentence in sentences:
        padded = " " + " ".join(letter_words(sentence)) + " "
        for i in range(len(padded) - 2):
            counts[padded[i:i + 3]] += 1
    return counts


def build_profile(counts: Counter, vocab_size: int) -> tuple[dict, float]:
    kept = dict(counts.most_common(TOP_TRIGRAMS))
    total = sum(counts.values())
    # Add-one smoothing over the cross-language trigram vocabulary; unseen
    # trigrams score the floor.
    denom = total + vocab_size + 1
    weights = {g: math.log((c + 1) / denom) for g, c in kept.items()}
    floor = math.log(1.0 / denom)
    return weights, floor


def main() -> None:
    en_counts = trigram_counts(ENGLISH_SENTENCES)
    nl_counts = trigram_counts(DUTCH_SENTENCES)
    vocab = len(set(en_counts) | set(nl_counts))

    shared = set(ENGLISH_STOPWORDS) & set(DUTCH_STOPWORDS)
    if shared:
        print(f"dropping shared stopwords: {sorted(shared)}")
    en_stop = sorted(set(ENGLISH_STOPWORDS) - shared)
    nl_stop = sorted(set(DUTCH_STOPWORDS) - shared)

    en_weights, en_floor = build_profile(en_counts, vocab)
    nl_weights, nl_floor = build_profile(nl_counts, vocab)

    data = {
        "version": PROFILE_VERSION,
        "languages": {
            "English": {"trigrams": en_weights, "floor": en_floor, "stopwords": en_stop},
            "Dutch": {"trigrams": nl_weights, "floor": nl_floor, "stopwords": nl_stop},
        },
    }
    out = Path(__file__).resolve().parent.parent / "src" / "discaudit" / "data" / "lang_profiles.json"
    out.write_text(json.dumps(data, ensure_ascii=False, sort_keys=True), encoding="utf-8")
    print(f"wrote {out} ({len(en_weights)} EN trigrams, {len(nl_weights)} NL trigrams, "
          f"{len(en_stop)}/{len(nl_stop)} stopwords)")


if __name__ == "__main__":
    main()
