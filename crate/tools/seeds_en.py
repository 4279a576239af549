"""Seed word lists for the English-variant locales."""

COUNTRIES_EN = """United States|Canada|Mexico|Brazil|Argentina|United Kingdom|Ireland|France|Germany|Italy|Spain|Portugal|Netherlands|Belgium|Switzerland|Austria|Sweden|Norway|Denmark|Finland|Poland|Greece|Turkey|Russia|Ukraine|Egypt|Nigeria|Kenya|South Africa|Ethiopia|Morocco|India|Pakistan|Bangladesh|Sri Lanka|Nepal|China|Japan|South Korea|Vietnam|Thailand|Philippines|Indonesia|Malaysia|Singapore|Australia|New Zealand|Iran|Iraq|Israel|Saudi Arabia|Colombia|Peru|Chile|Jamaica|Haiti|Cuba""".split("|")

SAINTS_EN = "Mary|Joseph|Luke|Vincent|Francis|Anne|Jude|Elizabeth|John|Michael".split("|")

EN_US = dict(
    feminine="""Mary Patricia Jennifer Linda Elizabeth Barbara Susan Jessica Sarah Karen Lisa Nancy Betty Sandra Margaret Ashley Kimberly Emily Donna Michelle Carol Amanda Melissa Deborah Stephanie Dorothy Rebecca Sharon Laura Cynthia Amy Kathleen Angela Shirley Brenda Emma Anna Pamela Nicole Samantha Katherine Christine Helen Debra Rachel Carolyn Janet Maria Catherine Heather Diane Olivia Julie Joyce Victoria Ruth Virginia Lauren Kelly Christina""".split(),
    masculine="""James Robert John Michael David William Richard Joseph Thomas Christopher Charles Daniel Matthew Anthony Mark Donald Steven Andrew Paul Joshua Kenneth Kevin Brian Timothy Ronald George Jason Edward Jeffrey Ryan Jacob Nicholas Gary Eric Jonathan Stephen Larry Justin Scott Brandon Benjamin Samuel Gregory Alexander Patrick Frank Raymond Jack Dennis Jerry Tyler Aaron Jose Adam Nathan Henry Zachary Douglas Peter Kyle""".split(),
    surname="""Smith Johnson Williams Brown Jones Garcia Miller Davis Rodriguez Martinez Hernandez Lopez Gonzalez Wilson Anderson Thomas Taylor Moore Jackson Martin Lee Perez Thompson White Harris Sanchez Clark Ramirez Lewis Robinson Walker Young Allen King Wright Scott Torres Nguyen Hill Flores Green Adams Nelson Baker Hall Rivera Campbell Mitchell Carter Roberts Gomez Phillips Evans Turner Diaz Parker Cruz Edwards Collins Reyes""".split(),
    city="""New York|Los Angeles|Chicago|Houston|Phoenix|Philadelphia|San Antonio|San Diego|Dallas|San Jose|Austin|Jacksonville|Fort Worth|Columbus|Charlotte|Indianapolis|Seattle|Denver|Boston|Nashville|Detroit|Portland|Memphis|Louisville|Baltimore|Milwaukee|Albuquerque|Tucson|Fresno|Sacramento|Atlanta|Omaha|Raleigh|Miami|Cleveland|Tulsa|Oakland|Minneapolis|Wichita|Tampa|New Orleans|Honolulu|Anaheim|Pittsburgh|Cincinnati|St. Louis|Toledo|Buffalo|Madison|Reno|Boise|Richmond|Spokane|Savannah""".split("|"),
    state="""Alabama|Alaska|Arizona|Arkansas|California|Colorado|Connecticut|Delaware|Florida|Georgia|Hawaii|Idaho|Illinois|Indiana|Iowa|Kansas|Kentucky|Louisiana|Maine|Maryland|Massachusetts|Michigan|Minnesota|Mississippi|Missouri|Montana|Nebraska|Nevada|New Hampshire|New Jersey|New Mexico|New York|North Carolina|North Dakota|Ohio|Oklahoma|Oregon|Pennsylvania|Rhode Island|South Carolina|South Dakota|Tennessee|Texas|Utah|Vermont|Virginia|Washington|West Virginia|Wisconsin|Wyoming""".split("|"),
    streets="Main|Oak|Pine|Maple|Cedar|Elm|Washington|Lake|Hill|Park|Walnut|Sunset|Lincoln|Jackson|Church|Highland|Madison|Franklin|Chestnut|River".split("|"),
    street_suffix="Street|Avenue|Road|Drive|Lane|Boulevard|Court|Way".split("|"),
    address_formats=["{num} {street} {suffix}"],
    hospital_formats=["{city} General Hospital", "{city} Medical Center", "St. {saint} Hospital", "{surname} Memorial Hospital", "{city} Children's Hospital"],
    company_formats=["{surname} Inc", "{surname} LLC", "{surname} Group", "{surname} and Sons", "{surname}-{surname2} Corp"],
    university_formats=["University of {state}", "{state} State University", "{city} College"],
    email_first="james mary john patricia robert jennifer michael linda david susan".split(),
    email_last="smith johnson brown jones miller davis".split(),
    email_domain="gmail.com yahoo.com outlook.com aol.com comcast.net verizon.net".split(),
    phone=["(###) ###-####"],
    date=["{mm}/{dd}/{yyyy}", "{month} {d}, {yyyy}", "{m}/{d}/{yyyy}"],
    email=["{user}@{domain}", "{user}##@{domain}"],
    other=["########", "###-##-####"],
    name_format="{first} {last}",
    countries=COUNTRIES_EN,
    saints=SAINTS_EN,
)

EN_GB = dict(
    feminine="""Olivia Amelia Isla Ava Emily Sophie Grace Mia Poppy Ella Lily Evie Isabella Sophia Jessica Freya Charlotte Daisy Alice Florence Phoebe Ruby Matilda Harriet Imogen Eleanor Beatrice Rosie Holly Millie Abigail Chloe Lucy Hannah Ellie Megan Bethany Gemma Zoe Kirsty Fiona Siobhan Eilidh Niamh Rhiannon Cerys Ffion Sian Maisie Esme""".split(),
    masculine="""Oliver George Harry Noah Jack Leo Arthur Muhammad Oscar Charlie Jacob Thomas Freddie Alfie Archie Theodore Henry Joshua William James Alexander Edward Isaac Finley Harrison Sebastian Max Lucas Ethan Toby Rory Callum Angus Hamish Alistair Euan Gareth Dylan Rhys Owain Ciaran Declan Niall Nigel Graham Colin Rupert Hugo Barnaby Ewan""".split(),
    surname="""Smith Jones Taylor Williams Brown Davies Evans Wilson Thomas Roberts Johnson Lewis Walker Robinson Wood Thompson White Watson Jackson Wright Green Harris Cooper King Lee Martin Clarke James Morgan Hughes Edwards Hill Moore Clark Harrison Scott Young Morris Hall Ward Turner Carter Phillips Mitchell Patel Adams Campbell Anderson Allen Cook""".split(),
    city="""London|Birmingham|Manchester|Liverpool|Leeds|Sheffield|Bristol|Newcastle|Nottingham|Leicester|Coventry|Bradford|Cardiff|Belfast|Edinburgh|Glasgow|Aberdeen|Dundee|Swansea|Southampton|Portsmouth|Plymouth|Brighton|Reading|Oxford|Cambridge|York|Bath|Exeter|Norwich|Derby|Stoke-on-Trent|Wolverhampton|Sunderland|Hull|Preston|Blackpool|Ipswich|Peterborough|Gloucester|Cheltenham|Worcester|Lincoln|Carlisle|Durham|Chester|Canterbury|Salisbury|Winchester|Inverness|Stirling|Wrexham""".split("|"),
    state="""Kent|Essex|Surrey|Sussex|Hampshire|Devon|Cornwall|Dorset|Somerset|Wiltshire|Berkshire|Oxfordshire|Buckinghamshire|Hertfordshire|Bedfordshire|Cambridgeshire|Norfolk|Suffolk|Lincolnshire|Nottinghamshire|Derbyshire|Leicestershire|Northamptonshire|Warwickshire|Worcestershire|Herefordshire|Gloucestershire|Shropshire|Staffordshire|Cheshire|Lancashire|Cumbria|Northumberland|County Durham|Yorkshire|Merseyside|Tyne and Wear|West Midlands|Greater Manchester|Rutland|Fife|Perthshire|Aberdeenshire|Lanarkshire|Ayrshire|Midlothian|Gwynedd|Powys|Pembrokeshire|Antrim|Armagh|Tyrone""".split("|"),
    streets="High|Station|Church|Victoria|Park|Mill|Queens|Kings|London|Manor|Green|Grange|School|North|Albert|New|York|Windsor|Chapel|Springfield".split("|"),
    street_suffix="Road|Street|Lane|Close|Avenue|Crescent|Gardens|Terrace|Way|Drive".split("|"),
    address_formats=["{num} {street} {suffix}"],
    hospital_formats=["{city} Royal Infirmary", "{city} General Hospital", "Royal {city} Hospital", "St {saint}'s Hospital"],
    company_formats=["{surname} Ltd", "{surname} and Sons", "{surname} plc", "{surname} & Partners LLP"],
    university_formats=["University of {city}", "{city} University", "{city} Metropolitan University"],
    email_first="oliver amelia george isla harry emily jack sophie".split(),
    email_last="smith jones taylor davies evans wilson".split(),
    email_domain="btinternet.com sky.com gmail.com hotmail.co.uk yahoo.co.uk".split(),
    phone=["0#### ######", "+44 #### ######", "07### ######"],
    date=["{dd}/{mm}/{yyyy}", "{d} {month} {yyyy}"],
    email=["{user}@{domain}"],
    other=["### ### ####", "########"],
    name_format="{first} {last}",
    countries=COUNTRIES_EN,
    saints=SAINTS_EN,
)

EN_AU = dict(
    feminine=[],
    masculine=[],
    surname="""Smith Jones Williams Brown Wilson Taylor Johnson White Martin Anderson Thompson Nguyen Thomas Walker Harris Lee Ryan Robinson Kelly King Davis Wright Evans Roberts Green Hall Wood Jackson Clarke Patel Khan Lewis James Phillips Mitchell Turner Edwards Moore Campbell Murphy O'Brien Scott Young Hill Cooper Morris Ward Baker Bell Hughes""".split(),
    city="""Sydney|Melbourne|Brisbane|Perth|Adelaide|Gold Coast|Newcastle|Canberra|Sunshine Coast|Wollongong|Hobart|Geelong|Townsville|Cairns|Darwin|Toowoomba|Ballarat|Bendigo|Albury|Launceston|Mackay|Rockhampton|Bunbury|Bundaberg|Coffs Harbour|Wagga Wagga|Hervey Bay|Mildura|Shepparton|Port Macquarie|Gladstone|Tamworth|Traralgon|Orange|Bowral|Dubbo|Geraldton|Nowra|Warrnambool|Kalgoorlie|Albany|Bathurst|Lismore|Devonport|Burnie|Mount Gambier|Whyalla|Broome|Alice Springs|Katherine|Armidale|Goulburn""".split("|"),
    state="New South Wales|Victoria|Queensland|Western Australia|South Australia|Tasmania|Australian Capital Territory|Northern Territory".split("|"),
    streets="George|Pitt|Collins|Bourke|Flinders|Queen|King|Elizabeth|Swanston|Hay|Murray|Hunter|Macquarie|Oxford|Victoria|Bridge|Beach|Ocean|Church|Station".split("|"),
    street_suffix="Street|Road|Parade|Avenue|Terrace|Drive|Crescent|Highway".split("|"),
    address_formats=["{num} {street} {suffix}"],
    hospital_formats=["{city} Base Hospital", "Royal {city} Hospital", "{city} Private Hospital", "{city} District Hospital"],
    company_formats=["{surname} Pty Ltd", "{surname} Group", "{surname} & Co"],
    university_formats=["University of {city}", "{city} University"],
    email_first="jack charlotte william olivia lachlan mia cooper ruby".split(),
    email_last="smith jones wilson kelly ryan murphy".split(),
    email_domain="bigpond.com optusnet.com.au gmail.com outlook.com.au".split(),
    phone=["(0#) #### ####", "04## ### ###", "+61 # #### ####"],
    date=["{dd}/{mm}/{yyyy}"],
    email=["{user}@{domain}"],
    other=["#### ##### #", "########"],
    name_format="{first} {last}",
    countries=COUNTRIES_EN,
    saints=SAINTS_EN,
)

EN_CA = dict(
    feminine=[],
    masculine=[],
    surname="""Tremblay Gagnon Roy Côté Bouchard Gauthier Morin Lavoie Fortin Gagné Ouellet Pelletier Bélanger Lévesque Bergeron Leblanc Paquette Girard Simard Boucher Caron Beaulieu Cloutier Dubé Poirier Fournier Lapointe Leclerc Lefebvre Poulin Thibault St-Pierre Nadeau Martin Landry Martel Bédard Grenier Lessard Bernier Smith Brown Wilson MacDonald Campbell Anderson Taylor Thompson Stewart Robertson Johnston""".split(),
    city="""Toronto|Montreal|Vancouver|Calgary|Edmonton|Ottawa|Winnipeg|Quebec City|Hamilton|Kitchener|London|Halifax|Victoria|Oshawa|Windsor|Saskatoon|Regina|St. Catharines|Barrie|Kelowna|Abbotsford|Sherbrooke|Guelph|Kingston|Moncton|Trois-Rivières|Saguenay|Brantford|Thunder Bay|Sudbury|Saint John|Peterborough|Lethbridge|Nanaimo|Kamloops|Red Deer|Fredericton|Charlottetown|St. John's|Whitehorse|Yellowknife|Iqaluit|Gatineau|Laval|Longueuil|Markham|Mississauga|Brampton|Surrey|Burnaby""".split("|"),
    state="Ontario|Quebec|British Columbia|Alberta|Manitoba|Saskatchewan|Nova Scotia|New Brunswick|Newfoundland and Labrador|Prince Edward Island|Yukon|Northwest Territories|Nunavut".split("|"),
    streets="Yonge|Bloor|King|Queen|Dundas|Main|Maple|Oak|Pine|Cedar|Elm|Wellington|Sherbrooke|Portage|Jasper|Granville|Robson|Spadina|Bay|Front".split("|"),
    street_suffix="Street|Avenue|Road|Boulevard|Drive|Crescent".split("|"),
    address_formats=["{num} {street} {suffix}"],
    hospital_formats=["{city} General Hospital", "{city} Health Sciences Centre", "Hôpital de {city}", "{city} Regional Hospital"],
    company_formats=["{surname} Inc.", "{surname} Ltd.", "{surname} Group"],
    university_formats=["University of {city}", "Université de {city}", "{city} University"],
    email_first="liam emma noah olivia william chloe felix lea".split(),
    email_last="tremblay gagnon roy smith wilson martin".split(),
    email_domain="rogers.com shaw.ca sympatico.ca gmail.com videotron.ca".split(),
    phone=["(###) ###-####", "###-###-####", "+1 ### ### ####"],
    date=["{yyyy}-{mm}-{dd}", "{mm}/{dd}/{yyyy}", "{month} {d}, {yyyy}"],
    email=["{user}@{domain}"],
    other=["### ### ###", "########"],
    name_format="{first} {last}",
    countries=COUNTRIES_EN,
    saints=SAINTS_EN,
)
